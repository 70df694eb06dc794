#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "apn/gf.hpp"
#include "apn/spectra.hpp"
#include "apn/tower.hpp"

namespace apn::chain {

// Everything the fiber-counting argument needs for F = GF(3^n), n odd, and an
// even k > 0 coprime to n: the half-power exponents, the resolved power-map
// exponent d = d1/d2 mod q-1, and the quadratic extension E of F. The gcd and
// parity hypotheses are validated here once so the chain functions never run
// outside their domain.
struct ChainContext {
  gf::Field F;
  tower::Tower T;
  std::uint32_t n = 0, k = 0;
  std::uint64_t d1 = 0;  // (3^n+1)/2
  std::uint64_t d2 = 0;  // (3^k+1)/2, invertible mod q-1
  std::uint64_t e2 = 0;  // (3^k-1)/2, gcd with q-1 is 2
  std::uint64_t d = 0;   // d1/d2 mod q-1, always even
};

ChainContext chain_context(std::uint32_t n, std::uint32_t k);
ChainContext chain_context(const gf::Field& F, std::uint32_t k);

// x -> x^(q-2) + 1: a permutation of F sending 0 to 1 and x to 1/x + 1
// otherwise.
gf::FieldElement pi(const ChainContext& ctx, const gf::FieldElement& x);
// x -> x^(d2), a permutation since gcd(d2, q-1) = 1.
gf::FieldElement sigma_perm(const ChainContext& ctx, const gf::FieldElement& x);
// x -> (x-2)/4, with 1/4 computed in F (no characteristic-3 special case).
gf::FieldElement tau_perm(const ChainContext& ctx, const gf::FieldElement& x);

// The derivative Delta f(x) = (x+1)^d - x^d of the power map, and the chain
// f1..f4 it factors through; all five share one fiber-size multiset.
gf::FieldElement delta_f(const ChainContext& ctx, const gf::FieldElement& x);
gf::FieldElement f1(const ChainContext& ctx, const gf::FieldElement& x);
gf::FieldElement f2(const ChainContext& ctx, const gf::FieldElement& x);
gf::FieldElement f3(const ChainContext& ctx, const gf::FieldElement& x);
gf::FieldElement f4(const ChainContext& ctx, const gf::FieldElement& x);

// mu(x) = x + 1/x on E*; kappa and lambda are its restrictions to F* and to
// the unit circle of E, both valued in F.
tower::TowerElement mu(const tower::TowerElement& x);
gf::FieldElement kappa(const gf::FieldElement& x);
gf::FieldElement lambda(const tower::TowerElement& x);

// {x in E* : mu(x) = c}, canonical order.
std::vector<tower::TowerElement> mu_fiber(const tower::Tower& T,
                                          const gf::FieldElement& c);

// F splits as G = {2,-2}, H = {c : eta(c^2-4) = 1}, I = {c : eta(c^2-4) = -1};
// mu-fibers over G sit in {1,-1}, over H in F*, over I in the unit circle.
enum class CClass { G, H, I };
CClass classify_c(const gf::FieldElement& c);

// |phi^-1(c)| = (|(phi.kappa)^-1(c)| + |(phi.lambda)^-1(c)|) / 2 for every c;
// holds for arbitrary phi because kappa and lambda jointly double-cover F.
bool fiber_average_check(
    const ChainContext& ctx,
    const std::function<gf::FieldElement(const gf::FieldElement&)>& phi);

// Closed-form fiber sizes: the theorem's prediction for Delta f, and the
// kappa / lambda / f4 cover forms it is assembled from.
std::uint64_t predicted_fiber_size(const ChainContext& ctx,
                                   const gf::FieldElement& c);
std::uint64_t predicted_kappa_fibers(const ChainContext& ctx,
                                     const gf::FieldElement& c);
std::uint64_t predicted_lambda_fibers(const ChainContext& ctx,
                                      const gf::FieldElement& c);
std::uint64_t predicted_f4_fibers(const ChainContext& ctx,
                                  const gf::FieldElement& c);

spectra::SpectrumMultiset predicted_spectrum(const ChainContext& ctx);

// One row per c: brute-force count against the closed form.
struct FiberRecord {
  gf::FieldElement c;
  std::uint64_t brute = 0;
  std::uint64_t predicted = 0;
  bool match = false;
};
struct FiberComparison {
  std::vector<FiberRecord> records;  // canonical order over c
  bool all_match = false;
};

FiberComparison verify_derivative_fibers(const ChainContext& ctx);
FiberComparison verify_kappa_fibers(const ChainContext& ctx);
FiberComparison verify_lambda_fibers(const ChainContext& ctx);
FiberComparison verify_f4_fibers(const ChainContext& ctx);

// Fiber multisets of Delta f, f1, f2, f3, f4 in that order.
std::vector<spectra::SpectrumMultiset> chain_spectra(const ChainContext& ctx);

// Sign in the closed form of f4.mu: +1 when j and k share parity or 2 is a
// square mod p (p = 1,7 mod 8), else -1.
int f4_mu_sign(std::uint32_t p, std::uint32_t j, std::uint32_t k);
// Sign tau in (f4.mu)(-x) = tau * (f4.mu)(x): -1 iff p = 3 mod 4 and j odd.
int negation_sign(std::uint32_t p, std::uint32_t j);

// (x+1)^(p^j+1) - (x-1)^(p^j+1) = 2(x^(p^j) + x), over all of F resp. E.
bool binomial_difference_identity(const gf::Field& F, std::uint32_t j);
bool binomial_difference_identity(const tower::Tower& T, std::uint32_t j);
// (x+1/x+2)^((p^j+1)/2) - (x+1/x-2)^((p^j+1)/2) = 2 x^(-(p^j+1)/2) (x^(p^j)+x)
// over F* resp. E*.
bool laurent_difference_identity(const gf::Field& F, std::uint32_t j);
bool laurent_difference_identity(const tower::Tower& T, std::uint32_t j);
// Both of the above over the tower.
bool polynomial_identity_checks(const tower::Tower& T, std::uint32_t j);

// (f4.mu)(x) = sign * (x^(p^j)+x)^(d2) / (x^(p^k)+x)^(d1) on F* and the unit
// circle, with d1 = (p^j+1)/2, d2 = (p^k+1)/2; j and k are free parameters
// (gcd(d2, q-1) = 1 required). Also checks x^(p^k) + x != 0 on that domain.
bool f4_mu_identity_check(const tower::Tower& T, std::uint32_t j,
                          std::uint32_t k);
// (f4.mu)(1/x) = (f4.mu)(x), (f4.mu)(-x) = (f4.mu)(-1/x) = tau * (f4.mu)(x).
bool f4_mu_symmetry_check(const tower::Tower& T, std::uint32_t j,
                          std::uint32_t k);

// The per-lemma fiber structure facts behind the kappa/lambda counts; each
// sweeps its whole domain. fiber_structure_checks runs them all.
bool kappa_cover_closed_form(const ChainContext& ctx);
bool lambda_cover_closed_form(const ChainContext& ctx);
bool lambda_cover_square_identity(const ChainContext& ctx);
bool lambda_ratio_square_is_nonresidue(const ChainContext& ctx);
bool equal_ratio_implies_pair(const ChainContext& ctx);
bool negated_ratio_implies_pair(const ChainContext& ctx);
bool lambda_fiber_over_zero_is_pm_i(const ChainContext& ctx);
bool kappa_fibers_are_inverse_pairs(const ChainContext& ctx);
bool lambda_fibers_are_inverse_pairs(const ChainContext& ctx);
bool fiber_structure_checks(const ChainContext& ctx);

}  // namespace apn::chain
