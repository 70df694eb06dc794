#include "apn/spectra.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace apn::spectra {

namespace {

SpectrumMultiset tally(const std::vector<std::uint64_t>& sizes) {
  std::map<std::uint64_t, std::uint64_t> m;
  for (auto s : sizes) ++m[s];
  SpectrumMultiset out;
  out.entries.assign(m.begin(), m.end());
  return out;
}

void check_exponent(std::uint64_t d) {
  if (d < 1) throw std::invalid_argument("exponent must be >= 1");
}

// canonical rank of a packed (little-endian) table index
std::uint64_t rank_of_packed(const gf::FieldParams::PowTables& t,
                             std::uint64_t idx) {
  std::uint64_t digits[64];
  for (std::uint32_t i = 0; i < t.n; ++i) {
    digits[i] = idx % t.p;
    idx /= t.p;
  }
  std::uint64_t r = 0;
  for (std::uint32_t i = 0; i < t.n; ++i) r = r * t.p + digits[i];
  return r;
}

FiberTable table_from_counts(const gf::Field& F,
                             std::vector<std::uint64_t> counts) {
  FiberTable out;
  out.entries.reserve(F->q());
  auto elems = gf::all_elements(F);
  for (std::uint64_t r = 0; r < F->q(); ++r)
    out.entries.emplace_back(std::move(elems[r]), counts[r]);
  return out;
}

// Counts of Delta(x) = (x+1)^d - x^d over all of F, indexed by packed value.
// Powers walk the exp table incrementally (log jumps by d per step), and the
// subtraction splits into two limb-table lookups — the search loop runs this
// thousands of times per field, so the inner loops carry no divisions.
std::vector<std::uint64_t> derivative_counts_packed(const gf::Field& F,
                                                    std::uint64_t d) {
  const auto& t = F->pow_tables();
  std::vector<std::uint64_t> counts(t.q, 0);

  if (t.limb_lo) {
    const std::uint64_t L = t.limb_lo, H = t.limb_hi;

    // x^d for every x, split at the limb boundary; 0^d stays 0
    std::vector<std::uint16_t> vlo(t.q, 0), vhi(t.q, 0);
    const std::uint64_t dm = d % (t.q - 1);
    std::uint64_t j = 0;
    for (std::uint64_t i = 0; i + 1 < t.q; ++i) {
      const std::uint32_t x = t.exp[i];
      vlo[x] = t.exp_lo[j];
      vhi[x] = t.exp_hi[j];
      j += dm;
      if (j >= t.q - 1) j -= t.q - 1;
    }

    const std::uint32_t* sub_lo = t.sub_lo.data();
    const std::uint32_t* sub_hi = t.sub_hi.data();
    std::uint64_t c0 = 0;  // x mod p, tracked so x+1 needs no division
    for (std::uint64_t x = 0; x < t.q; ++x) {
      const std::uint64_t a = c0 + 1 == t.p ? x - c0 : x + 1;
      ++counts[sub_lo[vlo[a] * L + vlo[x]] + sub_hi[vhi[a] * H + vhi[x]]];
      if (++c0 == t.p) c0 = 0;
    }
  } else {
    for (std::uint64_t x = 0; x < t.q; ++x)
      ++counts[t.sub_idx(t.pow_idx(t.add_one_idx(x), d), t.pow_idx(x, d))];
  }
  return counts;
}

}  // namespace

std::string SpectrumMultiset::str() const {
  std::string out;
  for (const auto& [size, mult] : entries) {
    if (!out.empty()) out += " + ";
    out += std::to_string(mult) + "[" + std::to_string(size) + "]";
  }
  return out;
}

SpectrumMultiset SpectrumMultiset::scaled(std::uint64_t factor) const {
  SpectrumMultiset out = *this;
  for (auto& [size, mult] : out.entries) mult *= factor;
  return out;
}

std::uint64_t FiberTable::at(const gf::FieldElement& c) const {
  if (entries.empty()) throw std::logic_error("empty fiber table");
  std::uint64_t r = gf::canonical_rank(c);
  if (r >= entries.size() || !(entries[r].first == c))
    throw std::invalid_argument("element not covered by this fiber table");
  return entries[r].second;
}

SpectrumMultiset FiberTable::spectrum() const {
  std::vector<std::uint64_t> sizes;
  sizes.reserve(entries.size());
  for (const auto& e : entries) sizes.push_back(e.second);
  return tally(sizes);
}

FiberTable derivative_fiber_table(const gf::Field& F, std::uint64_t d,
                                  const gf::FieldElement& a) {
  check_exponent(d);
  auto f = [d](const gf::FieldElement& x) {
    return x.pow(static_cast<std::int64_t>(d));
  };
  return fiber_table(F, gf::all_elements(F), discrete_derivative(f, a));
}

FiberTable reduced_derivative_table(const gf::Field& F, std::uint64_t d) {
  check_exponent(d);
  const auto& t = F->pow_tables();
  const auto packed = derivative_counts_packed(F, d);
  std::vector<std::uint64_t> counts(F->q(), 0);
  for (std::uint64_t v = 0; v < t.q; ++v)
    counts[rank_of_packed(t, v)] = packed[v];
  return table_from_counts(F, counts);
}

SpectrumMultiset reduced_spectrum(const gf::Field& F, std::uint64_t d) {
  // counts only; skips materializing elements, which search loops care about
  check_exponent(d);
  return tally(derivative_counts_packed(F, d));
}

SpectrumMultiset full_spectrum(const gf::Field& F, std::uint64_t d) {
  return reduced_spectrum(F, d).scaled(F->q() - 1);
}

SpectrumMultiset full_spectrum_brute_force(const gf::Field& F,
                                           std::uint64_t d) {
  check_exponent(d);
  std::vector<std::uint64_t> sizes;
  sizes.reserve((F->q() - 1) * F->q());
  for (const auto& a : gf::nonzero_elements(F))
    for (const auto& e : derivative_fiber_table(F, d, a).entries)
      sizes.push_back(e.second);
  return tally(sizes);
}

std::uint64_t differential_uniformity(const gf::Field& F, std::uint64_t d) {
  return reduced_spectrum(F, d).entries.back().first;
}

bool is_apn(const gf::Field& F, std::uint64_t d) {
  return differential_uniformity(F, d) == 2;
}

bool reflection_symmetry_holds(const gf::Field& F, std::uint64_t d) {
  check_exponent(d);
  if (d % 2 == 0)
    throw std::invalid_argument(
        "reflection symmetry only applies to odd exponents");
  auto delta = [&](const gf::FieldElement& x) {
    return (x + gf::one(F)).pow(static_cast<std::int64_t>(d)) -
           x.pow(static_cast<std::int64_t>(d));
  };
  const gf::FieldElement minus_half = -(gf::constant(F, 2).inv());
  std::uint64_t fixed = 0;
  for (const auto& x : gf::all_elements(F)) {
    gf::FieldElement image = -gf::one(F) - x;
    if (!(delta(image) == delta(x))) return false;
    if (image == x) {
      ++fixed;
      if (!(x == minus_half)) return false;
    }
  }
  return fixed == 1;
}

}  // namespace apn::spectra
