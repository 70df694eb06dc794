#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace apn::numth {

using BigInt = boost::multiprecision::cpp_int;

// p-adic valuation with an explicit infinity for v_p(0). Infinity is a
// dedicated state, not a sentinel integer: it compares greater than every
// finite valuation and absorbs addition.
class Valuation {
 public:
  static Valuation infinity() { return Valuation(std::nullopt); }
  explicit Valuation(std::uint64_t k) : v_(k) {}

  bool is_finite() const { return v_.has_value(); }
  std::uint64_t value() const;  // throws std::logic_error when infinite

  Valuation operator+(const Valuation& o) const {
    if (!is_finite() || !o.is_finite()) return infinity();
    return Valuation(*v_ + *o.v_);
  }
  bool operator==(const Valuation&) const = default;
  std::strong_ordering operator<=>(const Valuation& o) const {
    if (is_finite() && o.is_finite()) return *v_ <=> *o.v_;
    if (is_finite()) return std::strong_ordering::less;
    if (o.is_finite()) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  explicit Valuation(std::optional<std::uint64_t> v) : v_(v) {}
  std::optional<std::uint64_t> v_;
};

std::string to_string(const Valuation& v);

// Trial division for small inputs, Miller-Rabin above. Deterministic bases
// below 2^64, fixed-seed witnesses beyond that (desk scale only).
bool is_prime(const BigInt& n);

// v_p(n) for prime p; v_p(0) = infinity, negative n uses |n|.
Valuation vp(const BigInt& n, const BigInt& p);

// v2(a^j + 1) for sign=+1 and v2(a^j - 1) for sign=-1, odd a, by the mod-4
// case split:
//   a = 1 (mod 4):  v2(a^j+1) = 1,                 v2(a^j-1) = v2(a-1)+v2(j)
//   a = 3 (mod 4):  v2(a^j+1) = 1 (j even)         v2(a^j-1) = v2(a+1)+v2(j) (j even)
//                              = v2(a+1) (j odd)              = 1            (j odd)
// The j=0 and a=+-1 corners fall out of infinity-absorbing addition.
Valuation v2_closed_form(const BigInt& a, std::uint64_t j, int sign);

// gcd(a^m - 1, a^n - 1) = a^gcd(m,n) - 1 for a >= 2, with gcd(m,0) = m.
BigInt gcd_power_minus(const BigInt& a, std::uint64_t m, std::uint64_t n);

// gcd(a^m + 1, a^n - 1) for odd n, gcd(m,n) = 1: returns 1 if a is even,
// 2 if odd. With halved=true computes gcd((a^m+1)/2, a^n - 1) for odd a:
// 1 unless a = 3 (mod 4) and m is odd, in which case 2.
int gcd_power_plus_minus(const BigInt& a, std::uint64_t m, std::uint64_t n,
                         bool halved);

// (p^j - 1)/2 mod (p-1) == j(p-1)/2 mod (p-1) for odd p >= 3; returns the
// common residue.
BigInt half_power_congruence(const BigInt& p, std::uint64_t j);

// Exponent d1/d2 meaning d1 * d2^{-1} mod (q-1). Stored unreduced; reduced()
// divides out the gcd.
struct FractionalExponent {
  BigInt num;
  BigInt den;
  FractionalExponent reduced() const;
};

FractionalExponent parse_fraction(const std::string& text);  // "a" or "a/b"
std::string to_string(const FractionalExponent& f);

struct ResolvedExponent {
  FractionalExponent fraction;  // lowest terms
  std::uint64_t modulus;
  std::uint64_t value;  // in [1, modulus]; modulus itself encodes residue 0
};

// Requires gcd(den, modulus) = 1 after reduction; std::domain_error otherwise.
ResolvedExponent resolve_exponent(const FractionalExponent& f,
                                  std::uint64_t modulus);

// 64-bit modular helpers shared by gf and equiv.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m);
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m);  // gcd(a,m)=1

// Distinct prime factors, ascending, by trial division. Desk scale.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace apn::numth
