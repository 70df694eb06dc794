#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <vector>

#include "apn/gf.hpp"

namespace apn::tower {

class TowerParams;
class TowerElement;
using Tower = std::shared_ptr<const TowerParams>;

// The quadratic extension E = F[y]/(y^2 - s) of a base field F = GF(q),
// with s the canonically smallest non-square of F. Elements are pairs
// a + b*y with a, b in F; the canonical order compares a first, then b.
class TowerParams {
 public:
  const gf::Field& base() const { return base_; }
  std::uint64_t order() const { return order_; }  // q^2
  const gf::FieldElement& s() const { return s_; }

  ~TowerParams();

 private:
  TowerParams(gf::Field base, gf::FieldElement s);

  gf::Field base_;
  std::uint64_t order_;
  gf::FieldElement s_;
  // primitive element of E* as a coefficient pair (TowerElements are not
  // stored here so the params object never points back at itself)
  gf::FieldElement prim_a_, prim_b_;
  std::vector<std::uint64_t> order1_factors_;  // distinct prime factors of q^2-1

  friend Tower tower_new(const gf::Field&);
  friend TowerElement primitive_element(const Tower&);
};

Tower tower_new(const gf::Field& base);

class TowerElement {
 public:
  TowerElement() = default;  // detached; any arithmetic on it throws

  const Tower& tower() const { return t_; }
  const gf::FieldElement& a() const { return a_; }  // base-field part
  const gf::FieldElement& b() const { return b_; }  // y-coefficient
  bool is_zero() const;
  bool in_base() const;  // b == 0

  TowerElement operator+(const TowerElement& o) const;
  TowerElement operator-(const TowerElement& o) const;
  TowerElement operator*(const TowerElement& o) const;
  TowerElement operator-() const;
  TowerElement inv() const;  // std::domain_error on zero
  TowerElement pow(std::int64_t e) const;
  TowerElement conj() const;                       // a - b*y, i.e. x^q
  TowerElement frobenius(std::uint32_t j) const;   // x -> x^(p^j)
  gf::FieldElement norm() const;                   // x * conj(x), lands in F

  bool operator==(const TowerElement& o) const {
    return t_.get() == o.t_.get() && a_ == o.a_ && b_ == o.b_;
  }
  std::strong_ordering operator<=>(const TowerElement& o) const;

 private:
  friend TowerElement element(const Tower&, gf::FieldElement,
                              gf::FieldElement);
  TowerElement(Tower t, gf::FieldElement a, gf::FieldElement b)
      : t_(std::move(t)), a_(std::move(a)), b_(std::move(b)) {}

  Tower t_;
  gf::FieldElement a_, b_;
};

TowerElement element(const Tower& t, gf::FieldElement a, gf::FieldElement b);
TowerElement zero(const Tower& t);
TowerElement one(const Tower& t);
TowerElement embed(const Tower& t, const gf::FieldElement& x);

// The canonically smallest generator of E*.
TowerElement primitive_element(const Tower& t);

// The unit circle U = {x : x * conj(x) = 1}, a cyclic group of order q+1.
TowerElement unit_circle_generator(const Tower& t);
std::vector<TowerElement> unit_circle_elements(const Tower& t);  // canonical order

// All q^2 elements in canonical order (guarded to desk-scale towers).
std::vector<TowerElement> all_elements(const Tower& t);
std::vector<TowerElement> nonzero_elements(const Tower& t);

// eta on E: 0 at zero, +1 on squares of E*, -1 otherwise.
int quadratic_character(const TowerElement& x);

}  // namespace apn::tower
