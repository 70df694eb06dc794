#pragma once

// Cyclotomic equivalence of power-map exponents mod p^n - 1, plus the
// Zha-Wang parameter correspondence for the (3^n+1)/(3^k+1) family.

#include <cstdint>
#include <vector>

#include "apn/numth.hpp"

namespace apn::equiv {

// Exponents d, e are equivalent mod m = p^n - 1 when e lies in the orbit of d
// under multiplication by p (Frobenius twist) together with inversion mod m
// when gcd(d, m) = 1.  Equivalent exponents give power maps with identical
// differential spectra.
struct ExponentClass {
    std::uint64_t modulus = 0;         // p^n - 1
    std::uint64_t representative = 0;  // smallest member
    std::vector<std::uint64_t> members;  // sorted, residues in [1, modulus - 1]

    bool operator==(const ExponentClass&) const = default;
};

// Class of d mod p^n - 1.  d is reduced mod the modulus first; a residue of 0
// does not name a power map and is rejected.
ExponentClass equivalence_class(std::uint64_t d, std::uint32_t p, std::uint32_t n);

bool are_equivalent(std::uint64_t d, std::uint64_t e, std::uint32_t p, std::uint32_t n);

// Every class with representative in [1, p^n - 2], sorted by representative.
// Together the members partition [1, p^n - 2].
std::vector<ExponentClass> all_classes(std::uint32_t p, std::uint32_t n);

// Parameters (n, m, d) with (3^m + 1) d - 2 = k (3^n - 1) for an odd positive
// integer k, d even and positive, gcd(m, n) = 1, 2m < n.  These force n odd
// and place d in the class of some (3^n+1)/(3^j+1) exponent with j even.
struct ZhaWangParams {
    std::uint32_t n = 0;
    std::uint32_t m = 0;
    std::uint64_t d = 0;
    std::uint64_t k = 0;  // the witness

    bool operator==(const ZhaWangParams&) const = default;
};

// Witness k for (n, m, d), validating each hypothesis.  Violations name the
// offending condition; a non-integral or even k means the triple is not a
// Zha-Wang instance.
std::uint64_t zha_wang_witness(std::uint32_t n, std::uint32_t m, std::uint64_t d);

// Validated bundle (calls zha_wang_witness).
ZhaWangParams zha_wang_params(std::uint32_t n, std::uint32_t m, std::uint64_t d);

// Fraction-exponent form (3^n + 1)/(3^j + 1) with j even, resolved mod 3^n - 1.
struct FractionForm {
    std::uint32_t n = 0;
    std::uint32_t j = 0;           // even, gcd(j, n) = 1
    std::uint64_t resolved = 0;    // ((3^n+1)/2) ((3^j+1)/2)^{-1} mod 3^n - 1

    bool operator==(const FractionForm&) const = default;
};

// Zha-Wang (n, m, d)  ->  fraction form with j = m when m is even, n - m
// otherwise.  Guarantees are_equivalent(zw.d, resolved, 3, zw.n).
FractionForm zha_wang_to_fraction(const ZhaWangParams& zw);

// Converse: the exponent (3^n+1)/(3^j+1), n odd, j even, gcd(j, n) = 1, has an
// equivalent representative in Zha-Wang form.  Reduce j mod n to m'; when
// 2m' < n the pair is (m', d); otherwise (n - m', 3^{m'} d mod 3^n - 1).
ZhaWangParams fraction_to_zha_wang(std::uint32_t n, std::uint32_t j);

}  // namespace apn::equiv
