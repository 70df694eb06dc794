#include "apn/gf.hpp"

#include "apn/numth.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <stdexcept>

namespace apn::gf {

namespace {

/* dense polynomial helpers over GF(p); vectors are coefficient sequences,
   constant term first, no trailing-zero guarantees unless trimmed */

void trim(std::vector<std::uint32_t>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<std::uint32_t> pmod(std::vector<std::uint32_t> a,
                                const std::vector<std::uint32_t>& f,
                                std::uint32_t p) {
  // f need not be monic; normalize via the leading coefficient's inverse
  std::vector<std::uint32_t> g = f;
  trim(g);
  assert(!g.empty());
  std::uint64_t lead_inv = numth::inverse_mod(g.back(), p);
  trim(a);
  while (a.size() >= g.size()) {
    std::uint64_t c = numth::mul_mod(a.back(), lead_inv, p);
    std::size_t shift = a.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) {
      std::uint64_t sub = numth::mul_mod(c, g[i], p);
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

std::vector<std::uint32_t> pmul(const std::vector<std::uint32_t>& a,
                                const std::vector<std::uint32_t>& b,
                                std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      acc[i + j] += static_cast<std::uint64_t>(a[i]) * b[j];
    if ((i & 15) == 15)
      for (auto& v : acc) v %= p;
  }
  std::vector<std::uint32_t> out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i)
    out[i] = static_cast<std::uint32_t>(acc[i] % p);
  return out;
}

std::vector<std::uint32_t> pmulmod(const std::vector<std::uint32_t>& a,
                                   const std::vector<std::uint32_t>& b,
                                   const std::vector<std::uint32_t>& f,
                                   std::uint32_t p) {
  return pmod(pmul(a, b, p), f, p);
}

std::vector<std::uint32_t> ppowmod(std::vector<std::uint32_t> base,
                                   std::uint64_t e,
                                   const std::vector<std::uint32_t>& f,
                                   std::uint32_t p) {
  std::vector<std::uint32_t> r{1};
  base = pmod(std::move(base), f, p);
  while (e) {
    if (e & 1) r = pmulmod(r, base, f, p);
    base = pmulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint32_t> pgcd(std::vector<std::uint32_t> a,
                                std::vector<std::uint32_t> b,
                                std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/* fixed-width element arithmetic against the defining polynomial; inputs and
   outputs are exactly n coefficients */

std::vector<std::uint32_t> mul_vec(const FieldParams& F,
                                   const std::vector<std::uint32_t>& a,
                                   const std::vector<std::uint32_t>& b) {
  const std::uint32_t p = F.p();
  const std::size_t n = F.n();
  const auto& poly = F.defining_poly();
  std::vector<std::uint64_t> acc(2 * n - 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      acc[i + j] += static_cast<std::uint64_t>(a[i]) * b[j];
  }
  for (auto& v : acc) v %= p;
  // reduce degrees 2n-2 .. n against the monic defining polynomial
  for (std::size_t i = 2 * n - 2; i + 1 > n; --i) {
    std::uint64_t c = acc[i];
    if (c == 0) continue;
    acc[i] = 0;
    for (std::size_t j = 0; j < n; ++j)
      acc[i - n + j] = (acc[i - n + j] + (p - poly[j]) * c) % p;
  }
  std::vector<std::uint32_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::uint32_t>(acc[i]);
  return out;
}

std::vector<std::uint32_t> one_vec(const FieldParams& F) {
  std::vector<std::uint32_t> v(F.n(), 0);
  v[0] = 1;
  return v;
}

std::vector<std::uint32_t> pow_vec(const FieldParams& F,
                                   std::vector<std::uint32_t> base,
                                   std::uint64_t e) {
  auto r = one_vec(F);
  while (e) {
    if (e & 1) r = mul_vec(F, r, base);
    base = mul_vec(F, base, base);
    e >>= 1;
  }
  return r;
}

bool is_zero_vec(const std::vector<std::uint32_t>& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint32_t c) { return c == 0; });
}

// coefficients of the element with canonical rank r (rank order == the
// lexicographic element order, c0 weighted heaviest)
std::vector<std::uint32_t> coeffs_from_rank(std::uint32_t p, std::uint32_t n,
                                            std::uint64_t r) {
  std::vector<std::uint32_t> c(n);
  for (std::uint32_t i = n; i-- > 0;) {
    c[i] = static_cast<std::uint32_t>(r % p);
    r /= p;
  }
  return c;
}

std::uint64_t parse_uint(const std::string& s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("bad integer '" + s + "'");
  return v;
}

}  // namespace

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly) {
  if (poly.size() < 2) throw std::invalid_argument("polynomial degree < 1");
  if (poly.back() != 1) throw std::invalid_argument("polynomial must be monic");
  for (auto c : poly)
    if (c >= p) throw std::invalid_argument("coefficient out of range");
  const std::uint32_t n = static_cast<std::uint32_t>(poly.size()) - 1;
  if (n == 1) return true;
  if (poly[0] == 0) return false;  // x divides
  // x^(p^i) mod poly chains; irreducible iff x^(p^n) = x and the proper
  // frobenius steps share no factor with poly
  const std::vector<std::uint32_t> x{0, 1};
  std::vector<std::uint32_t> h = x;
  std::vector<std::vector<std::uint32_t>> steps(n + 1);
  steps[0] = x;
  for (std::uint32_t i = 1; i <= n; ++i) {
    h = ppowmod(h, p, poly, p);
    steps[i] = h;
  }
  auto minus_x = [&](std::vector<std::uint32_t> g) {
    if (g.size() < 2) g.resize(2, 0);
    g[1] = (g[1] + p - 1) % p;
    trim(g);
    return g;
  };
  {
    auto diff = minus_x(steps[n]);
    if (!diff.empty()) return false;
  }
  for (std::uint64_t ell : numth::prime_factors(n)) {
    auto g = pgcd(minus_x(steps[n / ell]), poly, p);
    if (g.size() != 1) return false;
  }
  return true;
}

FieldParams::FieldParams(std::uint32_t p, std::uint32_t n,
                         std::vector<std::uint32_t> poly)
    : p_(p), n_(n), poly_(std::move(poly)) {
  q_ = 1;
  for (std::uint32_t i = 0; i < n_; ++i) {
    q_ *= p_;
    if (q_ > kMaxFieldOrder)
      throw std::invalid_argument("field order exceeds the desk-scale bound");
  }
  q1_factors_ = numth::prime_factors(q_ - 1);
  // canonically smallest generator of the multiplicative group
  for (std::uint64_t r = 1; r < q_; ++r) {
    auto cand = coeffs_from_rank(p_, n_, r);
    bool full_order = true;
    for (std::uint64_t ell : q1_factors_) {
      if (pow_vec(*this, cand, (q_ - 1) / ell) == one_vec(*this)) {
        full_order = false;
        break;
      }
    }
    if (full_order) {
      primitive_ = std::move(cand);
      break;
    }
  }
  if (primitive_.empty())
    throw std::logic_error("no primitive element found");  // unreachable
}

FieldParams::~FieldParams() = default;

std::uint64_t FieldParams::PowTables::pack(
    const std::vector<std::uint32_t>& c) const {
  std::uint64_t v = 0;
  for (std::uint32_t i = n; i-- > 0;) v = v * p + c[i];
  return v;
}

std::vector<std::uint32_t> FieldParams::PowTables::unpack(
    std::uint64_t idx) const {
  std::vector<std::uint32_t> c(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    c[i] = static_cast<std::uint32_t>(idx % p);
    idx /= p;
  }
  return c;
}

std::uint64_t FieldParams::PowTables::add_idx(std::uint64_t a,
                                              std::uint64_t b) const {
  if (limb_lo)
    return add_lo[(a % limb_lo) * limb_lo + b % limb_lo] +
           add_hi[(a / limb_lo) * limb_hi + b / limb_lo];
  std::uint64_t out = 0, scale = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    out += ((a % p + b % p) % p) * scale;
    a /= p;
    b /= p;
    scale *= p;
  }
  return out;
}

std::uint64_t FieldParams::PowTables::sub_idx(std::uint64_t a,
                                              std::uint64_t b) const {
  if (limb_lo)
    return sub_lo[(a % limb_lo) * limb_lo + b % limb_lo] +
           sub_hi[(a / limb_lo) * limb_hi + b / limb_lo];
  std::uint64_t out = 0, scale = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    out += ((a % p + p - b % p) % p) * scale;
    a /= p;
    b /= p;
    scale *= p;
  }
  return out;
}

const FieldParams::PowTables& FieldParams::pow_tables() const {
  std::call_once(tables_once_, [this] {
    auto t = std::make_unique<PowTables>();
    t->p = p_;
    t->n = n_;
    t->q = q_;
    t->exp.resize(q_ - 1);
    t->log.assign(q_, 0);
    std::vector<std::uint32_t> cur = one_vec(*this);
    for (std::uint64_t i = 0; i < q_ - 1; ++i) {
      std::uint64_t idx = t->pack(cur);
      t->exp[i] = static_cast<std::uint32_t>(idx);
      t->log[idx] = static_cast<std::uint32_t>(i);
      cur = mul_vec(*this, cur, primitive_);
    }

    std::uint64_t lo = 1;
    for (std::uint32_t i = 0; i < n_ / 2; ++i) lo *= p_;
    const std::uint64_t hi = q_ / lo;
    if (lo * lo + hi * hi <= (1ull << 22)) {   // also keeps limbs in uint16
      t->limb_lo = lo;
      t->limb_hi = hi;
      auto build = [this](std::uint64_t count, std::uint64_t scale, bool sub) {
        std::vector<std::uint32_t> tab(count * count);
        for (std::uint64_t a = 0; a < count; ++a)
          for (std::uint64_t b = 0; b < count; ++b) {
            std::uint64_t out = 0, base = scale, x = a, y = b;
            while (x || y) {
              std::uint64_t db = sub ? p_ - y % p_ : y % p_;
              out += ((x % p_ + db) % p_) * base;
              base *= p_;
              x /= p_;
              y /= p_;
            }
            tab[a * count + b] = static_cast<std::uint32_t>(out);
          }
        return tab;
      };
      t->add_lo = build(lo, 1, false);
      t->add_hi = build(hi, lo, false);
      t->sub_lo = build(lo, 1, true);
      t->sub_hi = build(hi, lo, true);
      t->exp_lo.resize(q_ - 1);
      t->exp_hi.resize(q_ - 1);
      for (std::uint64_t i = 0; i < q_ - 1; ++i) {
        t->exp_lo[i] = static_cast<std::uint16_t>(t->exp[i] % lo);
        t->exp_hi[i] = static_cast<std::uint16_t>(t->exp[i] / lo);
      }
    }
    tables_ = std::move(t);
  });
  return *tables_;
}

Field field_new(std::uint32_t p, std::uint32_t n,
                const std::vector<std::uint32_t>& poly) {
  if (p < 3 || p % 2 == 0 || !numth::is_prime(numth::BigInt(p)))
    throw std::invalid_argument("p must be an odd prime");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (poly.size() != static_cast<std::size_t>(n) + 1)
    throw std::invalid_argument("defining polynomial must have degree n");
  if (!is_irreducible(p, poly))
    throw std::invalid_argument("defining polynomial is not irreducible");
  return Field(new FieldParams(p, n, poly));
}

Field field_new(std::uint32_t p, std::uint32_t n) {
  if (p < 3 || p % 2 == 0 || !numth::is_prime(numth::BigInt(p)))
    throw std::invalid_argument("p must be an odd prime");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    count *= p;
    if (count > kMaxFieldOrder)
      throw std::invalid_argument("field order exceeds the desk-scale bound");
  }
  for (std::uint64_t r = 0; r < count; ++r) {
    auto coeffs = coeffs_from_rank(p, n, r);
    if (n > 1 && coeffs[0] == 0) continue;  // x divides
    coeffs.push_back(1);
    if (is_irreducible(p, coeffs)) return field_new(p, n, coeffs);
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

Field parse_field(const std::string& text) {
  auto caret = text.find('^');
  auto colon = text.find(':');
  if (caret == std::string::npos || colon == std::string::npos || caret > colon)
    throw std::invalid_argument("field description must look like p^n:c0,...,cn");
  std::uint64_t p = parse_uint(text.substr(0, caret));
  std::uint64_t n = parse_uint(text.substr(caret + 1, colon - caret - 1));
  std::vector<std::uint32_t> coeffs;
  std::size_t pos = colon + 1;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    std::string part = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    coeffs.push_back(static_cast<std::uint32_t>(parse_uint(part)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (p > (1u << 24) || n > 64)
    throw std::invalid_argument("field description out of range");
  return field_new(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(n),
                   coeffs);
}

std::string describe(const Field& f) {
  std::string out =
      std::to_string(f->p()) + "^" + std::to_string(f->n()) + ":";
  const auto& poly = f->defining_poly();
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(poly[i]);
  }
  return out;
}

namespace {

void require_attached(const FieldElement& x) {
  if (!x.field()) throw std::logic_error("operation on a detached element");
}

void require_same_field(const FieldElement& a, const FieldElement& b) {
  require_attached(a);
  require_attached(b);
  if (a.field().get() != b.field().get())
    throw std::invalid_argument("elements belong to different fields");
}

}  // namespace

bool FieldElement::is_zero() const {
  require_attached(*this);
  return is_zero_vec(c_);
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same_field(*this, o);
  auto out = c_;
  const std::uint32_t p = f_->p();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (out[i] + o.c_[i]) % p;
  return FieldElement(f_, std::move(out));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same_field(*this, o);
  auto out = c_;
  const std::uint32_t p = f_->p();
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = (out[i] + p - o.c_[i]) % p;
  return FieldElement(f_, std::move(out));
}

FieldElement FieldElement::operator-() const {
  require_attached(*this);
  auto out = c_;
  const std::uint32_t p = f_->p();
  for (auto& v : out) v = (p - v) % p;
  return FieldElement(f_, std::move(out));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same_field(*this, o);
  return FieldElement(f_, mul_vec(*f_, c_, o.c_));
}

FieldElement FieldElement::inv() const { return pow(-1); }

FieldElement FieldElement::pow(std::int64_t e) const {
  require_attached(*this);
  if (is_zero_vec(c_)) {
    if (e > 0) return *this;
    if (e == 0) return FieldElement(f_, one_vec(*f_));
    throw std::domain_error("division by zero");
  }
  const std::int64_t m = static_cast<std::int64_t>(f_->q()) - 1;
  std::int64_t r = e % m;
  if (r < 0) r += m;
  return FieldElement(f_, pow_vec(*f_, c_, static_cast<std::uint64_t>(r)));
}

FieldElement FieldElement::frobenius(std::uint32_t j) const {
  require_attached(*this);
  auto out = *this;
  for (std::uint32_t i = 0; i < j % f_->n(); ++i)
    out = FieldElement(f_, pow_vec(*f_, out.c_, f_->p()));
  return out;
}

std::strong_ordering FieldElement::operator<=>(const FieldElement& o) const {
  require_same_field(*this, o);
  return c_ <=> o.c_;
}

FieldElement element(const Field& f, std::vector<std::uint32_t> coeffs) {
  if (!f) throw std::invalid_argument("null field");
  if (coeffs.size() != f->n())
    throw std::invalid_argument("coefficient count must equal n");
  for (auto c : coeffs)
    if (c >= f->p()) throw std::invalid_argument("coefficient out of range");
  return FieldElement(f, std::move(coeffs));
}

FieldElement zero(const Field& f) {
  return element(f, std::vector<std::uint32_t>(f->n(), 0));
}

FieldElement one(const Field& f) { return constant(f, 1); }

FieldElement constant(const Field& f, std::int64_t c) {
  if (!f) throw std::invalid_argument("null field");
  std::int64_t p = f->p();
  std::vector<std::uint32_t> v(f->n(), 0);
  v[0] = static_cast<std::uint32_t>(((c % p) + p) % p);
  return element(f, std::move(v));
}

std::vector<FieldElement> all_elements(const Field& f) {
  std::vector<FieldElement> out;
  out.reserve(f->q());
  for (std::uint64_t r = 0; r < f->q(); ++r)
    out.push_back(element(f, coeffs_from_rank(f->p(), f->n(), r)));
  return out;
}

std::vector<FieldElement> nonzero_elements(const Field& f) {
  auto out = all_elements(f);
  out.erase(out.begin());  // zero has rank 0
  return out;
}

std::uint64_t canonical_rank(const FieldElement& x) {
  require_attached(x);
  std::uint64_t r = 0;
  for (auto c : x.coeffs()) r = r * x.field()->p() + c;
  return r;
}

FieldElement primitive_element(const Field& f) {
  return element(f, f->primitive_);
}

int quadratic_character(const FieldElement& x) {
  require_attached(x);
  if (x.is_zero()) return 0;
  const auto& f = x.field();
  FieldElement t = x.pow(static_cast<std::int64_t>((f->q() - 1) / 2));
  if (t == one(f)) return 1;
  if (t == -one(f)) return -1;
  throw std::logic_error("quadratic character out of range");  // unreachable
}

std::vector<FieldElement> power_map_fiber(const Field& f, std::uint64_t d,
                                          const FieldElement& c) {
  if (d < 1) throw std::invalid_argument("power_map_fiber: d must be >= 1");
  require_attached(c);
  if (c.field().get() != f.get())
    throw std::invalid_argument("elements belong to different fields");
  std::vector<FieldElement> out;
  for (auto& x : all_elements(f))
    if (x.pow(static_cast<std::int64_t>(d)) == c) out.push_back(x);
  return out;
}

}  // namespace apn::gf
