#include "apn/tower.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "apn/numth.hpp"

namespace apn::tower {

namespace {

void require_attached(const TowerElement& x) {
  if (!x.tower()) throw std::logic_error("operation on a detached element");
}

void require_same_tower(const TowerElement& a, const TowerElement& b) {
  require_attached(a);
  require_attached(b);
  if (a.tower().get() != b.tower().get())
    throw std::invalid_argument("elements belong to different towers");
}

}  // namespace

TowerParams::TowerParams(gf::Field base, gf::FieldElement s)
    : base_(std::move(base)),
      order_(base_->q() * base_->q()),
      s_(std::move(s)),
      prim_a_(gf::zero(base_)),
      prim_b_(gf::zero(base_)) {
  order1_factors_ = numth::prime_factors(order_ - 1);
  // canonically smallest generator of E*, found by scanning pairs (a, b) in
  // canonical order; pair arithmetic is spelled out here since TowerElements
  // need a finished params object
  using Pair = std::pair<gf::FieldElement, gf::FieldElement>;
  auto mul = [this](const Pair& x, const Pair& y) {
    return Pair(x.first * y.first + x.second * y.second * s_,
                x.first * y.second + x.second * y.first);
  };
  const Pair unit(gf::one(base_), gf::zero(base_));
  auto pw = [&](Pair x, std::uint64_t e) {
    Pair r = unit;
    while (e) {
      if (e & 1) r = mul(r, x);
      x = mul(x, x);
      e >>= 1;
    }
    return r;
  };
  const auto elems = gf::all_elements(base_);
  for (const auto& a : elems) {
    for (const auto& b : elems) {
      if (a.is_zero() && b.is_zero()) continue;
      Pair cand(a, b);
      bool full_order = true;
      for (std::uint64_t ell : order1_factors_) {
        if (pw(cand, (order_ - 1) / ell) == unit) {
          full_order = false;
          break;
        }
      }
      if (full_order) {
        prim_a_ = a;
        prim_b_ = b;
        return;
      }
    }
  }
  throw std::logic_error("no primitive element found");  // unreachable
}

TowerParams::~TowerParams() = default;

Tower tower_new(const gf::Field& base) {
  if (!base) throw std::invalid_argument("null field");
  if (base->q() > (1ull << 20))
    throw std::invalid_argument("tower base exceeds the desk-scale bound");
  // smallest non-square; exists since q is odd
  gf::FieldElement s;
  for (const auto& x : gf::nonzero_elements(base)) {
    if (gf::quadratic_character(x) == -1) {
      s = x;
      break;
    }
  }
  if (!s.field()) throw std::logic_error("no non-square found");  // unreachable
  return Tower(new TowerParams(base, s));
}

bool TowerElement::is_zero() const {
  require_attached(*this);
  return a_.is_zero() && b_.is_zero();
}

bool TowerElement::in_base() const {
  require_attached(*this);
  return b_.is_zero();
}

TowerElement TowerElement::operator+(const TowerElement& o) const {
  require_same_tower(*this, o);
  return TowerElement(t_, a_ + o.a_, b_ + o.b_);
}

TowerElement TowerElement::operator-(const TowerElement& o) const {
  require_same_tower(*this, o);
  return TowerElement(t_, a_ - o.a_, b_ - o.b_);
}

TowerElement TowerElement::operator*(const TowerElement& o) const {
  require_same_tower(*this, o);
  // (a + b y)(c + d y) = (ac + bd s) + (ad + bc) y
  return TowerElement(t_, a_ * o.a_ + b_ * o.b_ * t_->s(),
                      a_ * o.b_ + b_ * o.a_);
}

TowerElement TowerElement::operator-() const {
  require_attached(*this);
  return TowerElement(t_, -a_, -b_);
}

TowerElement TowerElement::conj() const {
  require_attached(*this);
  return TowerElement(t_, a_, -b_);
}

gf::FieldElement TowerElement::norm() const {
  require_attached(*this);
  return a_ * a_ - t_->s() * b_ * b_;
}

TowerElement TowerElement::inv() const {
  require_attached(*this);
  if (is_zero()) throw std::domain_error("division by zero");
  gf::FieldElement ninv = norm().inv();
  return TowerElement(t_, a_ * ninv, -b_ * ninv);
}

TowerElement TowerElement::pow(std::int64_t e) const {
  require_attached(*this);
  if (is_zero()) {
    if (e > 0) return *this;
    if (e == 0) return one(t_);
    throw std::domain_error("division by zero");
  }
  const std::int64_t m = static_cast<std::int64_t>(t_->order()) - 1;
  std::int64_t r = e % m;
  if (r < 0) r += m;
  TowerElement acc = one(t_);
  TowerElement base = *this;
  auto u = static_cast<std::uint64_t>(r);
  while (u) {
    if (u & 1) acc = acc * base;
    base = base * base;
    u >>= 1;
  }
  return acc;
}

TowerElement TowerElement::frobenius(std::uint32_t j) const {
  require_attached(*this);
  const std::uint32_t two_n = 2 * t_->base()->n();
  TowerElement out = *this;
  for (std::uint32_t i = 0; i < j % two_n; ++i)
    out = out.pow(static_cast<std::int64_t>(t_->base()->p()));
  return out;
}

std::strong_ordering TowerElement::operator<=>(const TowerElement& o) const {
  require_same_tower(*this, o);
  if (auto c = a_ <=> o.a_; c != 0) return c;
  return b_ <=> o.b_;
}

TowerElement element(const Tower& t, gf::FieldElement a, gf::FieldElement b) {
  if (!t) throw std::invalid_argument("null tower");
  if (a.field().get() != t->base().get() ||
      b.field().get() != t->base().get())
    throw std::invalid_argument("parts must come from the tower's base field");
  return TowerElement(t, std::move(a), std::move(b));
}

TowerElement zero(const Tower& t) {
  return element(t, gf::zero(t->base()), gf::zero(t->base()));
}

TowerElement one(const Tower& t) {
  return element(t, gf::one(t->base()), gf::zero(t->base()));
}

TowerElement embed(const Tower& t, const gf::FieldElement& x) {
  return element(t, x, gf::zero(t->base()));
}

TowerElement primitive_element(const Tower& t) {
  if (!t) throw std::invalid_argument("null tower");
  return element(t, t->prim_a_, t->prim_b_);
}

TowerElement unit_circle_generator(const Tower& t) {
  // beta^(q-1) has order exactly q+1
  return primitive_element(t).pow(
      static_cast<std::int64_t>(t->base()->q() - 1));
}

std::vector<TowerElement> unit_circle_elements(const Tower& t) {
  TowerElement g = unit_circle_generator(t);
  std::vector<TowerElement> out;
  out.reserve(t->base()->q() + 1);
  TowerElement cur = one(t);
  for (std::uint64_t i = 0; i <= t->base()->q(); ++i) {
    out.push_back(cur);
    cur = cur * g;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TowerElement> all_elements(const Tower& t) {
  if (!t) throw std::invalid_argument("null tower");
  if (t->order() > (1ull << 20))
    throw std::invalid_argument("tower too large to enumerate");
  const auto elems = gf::all_elements(t->base());
  std::vector<TowerElement> out;
  out.reserve(t->order());
  for (const auto& a : elems)
    for (const auto& b : elems) out.push_back(element(t, a, b));
  return out;
}

std::vector<TowerElement> nonzero_elements(const Tower& t) {
  auto out = all_elements(t);
  out.erase(out.begin());  // zero has rank 0
  return out;
}

int quadratic_character(const TowerElement& x) {
  require_attached(x);
  if (x.is_zero()) return 0;
  const auto& t = x.tower();
  TowerElement v = x.pow(static_cast<std::int64_t>((t->order() - 1) / 2));
  if (v == one(t)) return 1;
  if (v == -one(t)) return -1;
  throw std::logic_error("quadratic character out of range");  // unreachable
}

}  // namespace apn::tower
