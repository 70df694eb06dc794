#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "apn/gf.hpp"

namespace apn::spectra {

// Multiset of fiber sizes in the usual n1[a1] + ... + nt[at] notation:
// entries are (size, multiplicity) pairs, sizes strictly increasing,
// multiplicities positive.
struct SpectrumMultiset {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> entries;

  std::string str() const;  // e.g. "12[0] + 3[1] + 12[2]"
  SpectrumMultiset scaled(std::uint64_t factor) const;
  bool operator==(const SpectrumMultiset&) const = default;
};

// Fiber cardinalities of some function with values in a field F: one entry
// per element of F, canonical order, zero counts included. The counts sum to
// the size of whatever domain was swept.
struct FiberTable {
  std::vector<std::pair<gf::FieldElement, std::uint64_t>> entries;

  std::uint64_t at(const gf::FieldElement& c) const;
  SpectrumMultiset spectrum() const;
};

// Counts |g^{-1}(c)| over the given domain; g must map into `codomain`.
// g is called once per domain element and must be pure.
template <class DomainElt, class Fn>
FiberTable fiber_table(const gf::Field& codomain,
                       const std::vector<DomainElt>& domain, Fn&& g) {
  std::vector<std::uint64_t> counts(codomain->q(), 0);
  for (const auto& x : domain) {
    gf::FieldElement v = g(x);
    if (v.field().get() != codomain.get())
      throw std::invalid_argument("fiber_table: value outside the codomain");
    ++counts[gf::canonical_rank(v)];
  }
  FiberTable out;
  out.entries.reserve(codomain->q());
  auto elems = gf::all_elements(codomain);
  for (std::uint64_t r = 0; r < codomain->q(); ++r)
    out.entries.emplace_back(std::move(elems[r]), counts[r]);
  return out;
}

// Delta_a f: x -> f(x+a) - f(x). The step must be nonzero.
template <class Fn>
auto discrete_derivative(Fn f, const gf::FieldElement& a) {
  if (!a.field() || a.is_zero())
    throw std::invalid_argument("derivative step must be a nonzero element");
  return [f = std::move(f), a](const gf::FieldElement& x) {
    return f(x + a) - f(x);
  };
}

// Fiber table of Delta_a(x -> x^d) by direct polynomial arithmetic.
FiberTable derivative_fiber_table(const gf::Field& F, std::uint64_t d,
                                  const gf::FieldElement& a);

// Same thing for a = 1 on the exp/log fast path; the two are cross-checked
// in the tests.
FiberTable reduced_derivative_table(const gf::Field& F, std::uint64_t d);

SpectrumMultiset reduced_spectrum(const gf::Field& F, std::uint64_t d);

// Spectrum over all (a, b) with a != 0. For power maps every direction has
// the reduced multiset, so this is the reduced spectrum with multiplicities
// scaled by q-1; the brute-force path actually sweeps every direction.
SpectrumMultiset full_spectrum(const gf::Field& F, std::uint64_t d);
SpectrumMultiset full_spectrum_brute_force(const gf::Field& F, std::uint64_t d);

std::uint64_t differential_uniformity(const gf::Field& F, std::uint64_t d);
bool is_apn(const gf::Field& F, std::uint64_t d);

enum class ComposeSide { pre, post };

// Checks that composing g with the permutation pi (given as its value table
// in canonical order) leaves the fiber-size multiset unchanged; for
// post-composition also checks the pointwise relation
// |(pi.g)^{-1}(b)| = |g^{-1}(pi^{-1}(b))|.
template <class Fn>
bool multiset_equal_under_permutation(const gf::Field& F, Fn&& g,
                                      const std::vector<gf::FieldElement>& pi,
                                      ComposeSide side) {
  if (pi.size() != F->q())
    throw std::invalid_argument("permutation table must cover the field");
  std::vector<std::uint64_t> inv_rank(F->q(), 0);
  std::vector<bool> seen(F->q(), false);
  for (std::uint64_t r = 0; r < pi.size(); ++r) {
    std::uint64_t image = gf::canonical_rank(pi[r]);
    if (seen[image])
      throw std::invalid_argument("permutation table has a repeated value");
    seen[image] = true;
    inv_rank[image] = r;
  }
  const auto elems = gf::all_elements(F);
  FiberTable base = fiber_table(F, elems, g);
  if (side == ComposeSide::pre) {
    FiberTable composed = fiber_table(
        F, elems, [&](const gf::FieldElement& x) {
          return g(pi[gf::canonical_rank(x)]);
        });
    return composed.spectrum() == base.spectrum();
  }
  FiberTable composed = fiber_table(F, elems, [&](const gf::FieldElement& x) {
    return pi[gf::canonical_rank(g(x))];
  });
  if (composed.spectrum() != base.spectrum()) return false;
  for (std::uint64_t r = 0; r < F->q(); ++r)
    if (composed.entries[r].second != base.entries[inv_rank[r]].second)
      return false;
  return true;
}

// For odd d the involution x -> -1-x maps every fiber of Delta_1(x^d) to
// itself and fixes exactly one point, -1/2. Odd d only.
bool reflection_symmetry_holds(const gf::Field& F, std::uint64_t d);

}  // namespace apn::spectra
