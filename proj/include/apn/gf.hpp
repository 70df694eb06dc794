#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace apn::gf {

class FieldParams;
class FieldElement;
using Field = std::shared_ptr<const FieldParams>;

// GF(p^n) for an odd prime p. Elements are residue polynomials modulo a monic
// irreducible defining polynomial, stored as coefficient sequences
// (c0, c1, ..., c_{n-1}), constant term first. The canonical total order on
// elements is plain lexicographic comparison of those sequences; "smallest"
// always means smallest in that order.
class FieldParams {
 public:
  std::uint32_t p() const { return p_; }
  std::uint32_t n() const { return n_; }
  std::uint64_t q() const { return q_; }
  // c0..cn with cn = 1
  const std::vector<std::uint32_t>& defining_poly() const { return poly_; }

  // Discrete exp/log tables over a packed element index, built lazily on
  // first use. Internal fast path for exhaustive sweeps; its results are
  // checked against the direct polynomial arithmetic in the test suite.
  struct PowTables {
    std::uint32_t p, n;
    std::uint64_t q;
    std::vector<std::uint32_t> exp;  // exp[i] = pack(alpha^i), size q-1
    std::vector<std::uint32_t> log;  // log[pack(x)] = i for x != 0

    // Carry-free limb split: digit-wise arithmetic factors through any digit
    // boundary, so one packed add/sub is two table lookups. limb_lo == 0
    // means the field was too big for the tables and the digit loop runs.
    std::uint64_t limb_lo = 0;                            // p^(n/2)
    std::uint64_t limb_hi = 0;                            // p^(n - n/2)
    std::vector<std::uint32_t> add_lo, add_hi;            // hi pre-scaled
    std::vector<std::uint32_t> sub_lo, sub_hi;
    std::vector<std::uint16_t> exp_lo, exp_hi;            // exp[i] split

    // packed index: sum of c_i * p^i (a throwaway encoding, distinct from
    // the canonical order)
    std::uint64_t pack(const std::vector<std::uint32_t>& c) const;
    std::vector<std::uint32_t> unpack(std::uint64_t idx) const;

    std::uint64_t pow_idx(std::uint64_t x, std::uint64_t d) const {
      if (x == 0) return 0;
      return exp[(static_cast<unsigned __int128>(log[x]) * d) % (q - 1)];
    }
    std::uint64_t add_idx(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub_idx(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t add_one_idx(std::uint64_t x) const {
      std::uint64_t c0 = x % p;
      return c0 + 1 == p ? x - c0 : x + 1;
    }
  };
  const PowTables& pow_tables() const;

  ~FieldParams();

 private:
  FieldParams(std::uint32_t p, std::uint32_t n,
              std::vector<std::uint32_t> poly);

  std::uint32_t p_, n_;
  std::uint64_t q_;
  std::vector<std::uint32_t> poly_;
  std::vector<std::uint32_t> primitive_;       // coeffs of the primitive element
  std::vector<std::uint64_t> q1_factors_;      // distinct prime factors of q-1
  mutable std::once_flag tables_once_;
  mutable std::unique_ptr<PowTables> tables_;

  friend Field field_new(std::uint32_t, std::uint32_t,
                         const std::vector<std::uint32_t>&);
  friend class FieldElement;
  friend FieldElement primitive_element(const Field&);
};

// Largest q the library will construct; sweeps and tables are sized for
// desk-scale fields.
inline constexpr std::uint64_t kMaxFieldOrder = 1ull << 24;

// With no polynomial given, picks the lexicographically smallest monic
// irreducible of degree n (so GF(p) itself gets x, i.e. "p^1:0,1").
Field field_new(std::uint32_t p, std::uint32_t n);
Field field_new(std::uint32_t p, std::uint32_t n,
                const std::vector<std::uint32_t>& poly);

// Text form "p^n:c0,c1,...,cn".
Field parse_field(const std::string& text);
std::string describe(const Field& f);

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly);

class FieldElement {
 public:
  FieldElement() = default;  // detached; any arithmetic on it throws

  const Field& field() const { return f_; }
  const std::vector<std::uint32_t>& coeffs() const { return c_; }
  bool is_zero() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inv() const;          // std::domain_error on zero
  FieldElement pow(std::int64_t e) const;
  FieldElement frobenius(std::uint32_t j) const;  // x -> x^(p^j)

  bool operator==(const FieldElement& o) const {
    return f_.get() == o.f_.get() && c_ == o.c_;
  }
  // canonical order; mixing fields is a usage error
  std::strong_ordering operator<=>(const FieldElement& o) const;

 private:
  friend FieldElement element(const Field&, std::vector<std::uint32_t>);
  FieldElement(Field f, std::vector<std::uint32_t> c)
      : f_(std::move(f)), c_(std::move(c)) {}

  Field f_;
  std::vector<std::uint32_t> c_;
};

FieldElement element(const Field& f, std::vector<std::uint32_t> coeffs);
FieldElement zero(const Field& f);
FieldElement one(const Field& f);
FieldElement constant(const Field& f, std::int64_t c);  // c mod p

// All q elements in canonical order.
std::vector<FieldElement> all_elements(const Field& f);
std::vector<FieldElement> nonzero_elements(const Field& f);

// Position of x in the canonical order; all_elements(f)[canonical_rank(x)] == x.
std::uint64_t canonical_rank(const FieldElement& x);

// The canonically smallest element of multiplicative order q-1.
FieldElement primitive_element(const Field& f);

// eta: 0 at zero, +1 on squares, -1 on non-squares.
int quadratic_character(const FieldElement& x);

// {x : x^d = c}, canonical order, by direct enumeration. d >= 1.
std::vector<FieldElement> power_map_fiber(const Field& f, std::uint64_t d,
                                          const FieldElement& c);

}  // namespace apn::gf
