#include "apn/numth.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

namespace apn::numth {

namespace {

BigInt big_abs(const BigInt& n) { return n < 0 ? BigInt(-n) : n; }

std::uint64_t parity_mod4(const BigInt& a) {
  // residue of a mod 4 in [0,4), well-defined for negative a
  BigInt r = a % 4;
  if (r < 0) r += 4;
  return r.convert_to<std::uint64_t>();
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  // deterministic Miller-Rabin for 64-bit with the fixed base set above
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a % n, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

}  // namespace

std::uint64_t Valuation::value() const {
  if (!v_) throw std::logic_error("valuation is infinite");
  return *v_;
}

std::string to_string(const Valuation& v) {
  return v.is_finite() ? std::to_string(v.value()) : "inf";
}

bool is_prime(const BigInt& n) {
  if (n <= std::numeric_limits<std::uint64_t>::max())
    return n >= 2 && is_prime_u64(n.convert_to<std::uint64_t>());
  // fixed-seed witnesses keep behaviour reproducible run to run
  std::mt19937_64 gen(0x9e3779b97f4a7c15ull);
  return boost::multiprecision::miller_rabin_test(n, 40, gen);
}

Valuation vp(const BigInt& n, const BigInt& p) {
  if (!is_prime(p)) throw std::invalid_argument("vp: p is not prime");
  if (n == 0) return Valuation::infinity();
  BigInt m = big_abs(n);
  std::uint64_t k = 0;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  return Valuation(k);
}

Valuation v2_closed_form(const BigInt& a, std::uint64_t j, int sign) {
  if (a % 2 == 0) throw std::invalid_argument("v2_closed_form: a must be odd");
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("v2_closed_form: sign must be +1 or -1");
  const bool a1mod4 = parity_mod4(a) == 1;
  const bool j_even = (j % 2 == 0);
  const BigInt two = 2;
  if (sign == 1) {
    if (a1mod4) return Valuation(1);
    return j_even ? Valuation(1) : vp(a + 1, two);
  }
  if (a1mod4) return vp(a - 1, two) + vp(BigInt(j), two);
  return j_even ? vp(a + 1, two) + vp(BigInt(j), two) : Valuation(1);
}

BigInt gcd_power_minus(const BigInt& a, std::uint64_t m, std::uint64_t n) {
  if (a < 2) throw std::invalid_argument("gcd_power_minus: a must be >= 2");
  std::uint64_t g = std::gcd(m, n);  // gcd(m,0) = m by convention
  return boost::multiprecision::pow(a, static_cast<unsigned>(g)) - 1;
}

int gcd_power_plus_minus(const BigInt& a, std::uint64_t m, std::uint64_t n,
                         bool halved) {
  if (a < 2)
    throw std::invalid_argument("gcd_power_plus_minus: a must be >= 2");
  if (n % 2 == 0 || n == 0)
    throw std::invalid_argument("gcd_power_plus_minus: n must be odd");
  if (std::gcd(m, n) != 1)
    throw std::invalid_argument("gcd_power_plus_minus: gcd(m,n) must be 1");
  if (!halved) return (a % 2 == 0) ? 1 : 2;
  if (a % 2 == 0)
    throw std::invalid_argument(
        "gcd_power_plus_minus: halved form needs odd a");
  return (parity_mod4(a) == 3 && m % 2 == 1) ? 2 : 1;
}

BigInt half_power_congruence(const BigInt& p, std::uint64_t j) {
  if (p < 3 || p % 2 == 0)
    throw std::invalid_argument("half_power_congruence: p must be odd, >= 3");
  BigInt pm1 = p - 1;
  return (BigInt(j) * (pm1 / 2)) % pm1;
}

FractionalExponent FractionalExponent::reduced() const {
  if (num < 1 || den < 1)
    throw std::invalid_argument("fractional exponent must be positive");
  BigInt g = boost::multiprecision::gcd(num, den);
  return {num / g, den / g};
}

FractionalExponent parse_fraction(const std::string& text) {
  auto slash = text.find('/');
  auto parse_part = [](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad exponent: '" + s + "'");
    return BigInt(s);
  };
  if (slash == std::string::npos) return {parse_part(text), 1};
  return {parse_part(text.substr(0, slash)), parse_part(text.substr(slash + 1))};
}

std::string to_string(const FractionalExponent& f) {
  if (f.den == 1) return f.num.str();
  return f.num.str() + "/" + f.den.str();
}

ResolvedExponent resolve_exponent(const FractionalExponent& f,
                                  std::uint64_t modulus) {
  if (modulus < 1) throw std::invalid_argument("resolve_exponent: modulus < 1");
  FractionalExponent r = f.reduced();
  BigInt m = modulus;
  if (boost::multiprecision::gcd(r.den, m) != 1)
    throw std::domain_error(
        "exponent denominator " + r.den.str() +
        " is not invertible mod " + std::to_string(modulus));
  std::uint64_t num = (r.num % m).convert_to<std::uint64_t>();
  std::uint64_t den = (r.den % m).convert_to<std::uint64_t>();
  std::uint64_t d = mul_mod(num, inverse_mod(den, modulus), modulus);
  if (d == 0) d = modulus;  // residue 0 stands for the exponent q-1 itself
  return {r, modulus, d};
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  // extended Euclid on signed 128-bit; inputs are desk scale
  __int128 r0 = m, r1 = a % m, s0 = 0, s1 = 1;
  while (r1 != 0) {
    __int128 q = r0 / r1;
    __int128 t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) throw std::domain_error("inverse_mod: not invertible");
  __int128 inv = s0 % static_cast<__int128>(m);
  if (inv < 0) inv += m;
  return static_cast<std::uint64_t>(inv);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace apn::numth
