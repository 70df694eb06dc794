#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "apn/gf.hpp"
#include "apn/spectra.hpp"

using namespace apn::gf;
using namespace apn::spectra;

namespace {

SpectrumMultiset ms(std::vector<std::pair<std::uint64_t, std::uint64_t>> e) {
    return SpectrumMultiset{std::move(e)};
}

}  // namespace

TEST_CASE("spectrum rendering and scaling") {
    const auto s = ms({{0, 12}, {1, 3}, {2, 12}});
    CHECK(s.str() == "12[0] + 3[1] + 12[2]");
    CHECK(s.scaled(26) == ms({{0, 312}, {1, 78}, {2, 312}}));
    CHECK(ms({{3, 1}}).str() == "1[3]");
}

TEST_CASE("reduced spectra of known exponents") {
    const Field f27 = field_new(3, 3);
    CHECK(reduced_spectrum(f27, 8) == ms({{0, 12}, {1, 3}, {2, 12}}));
    CHECK(reduced_spectrum(f27, 20) == ms({{0, 12}, {1, 3}, {2, 12}}));
    CHECK(reduced_spectrum(f27, 1) == ms({{0, 26}, {27, 1}}));   // constant derivative
    CHECK(reduced_spectrum(f27, 2) == ms({{1, 27}}));            // planar: all fibers 1
    CHECK(reduced_spectrum(field_new(3, 1), 1) == ms({{0, 2}, {3, 1}}));
    CHECK(reduced_spectrum(field_new(3, 5), 218) == ms({{0, 120}, {1, 3}, {2, 120}}));
}

TEST_CASE("differential uniformity and the APN predicate") {
    const Field f = field_new(3, 3);
    CHECK(differential_uniformity(f, 8) == 2);
    CHECK(differential_uniformity(f, 1) == 27);
    CHECK(differential_uniformity(f, 2) == 1);
    CHECK(differential_uniformity(f, 26) == 25);
    CHECK(is_apn(f, 8));
    CHECK(is_apn(f, 20));
    CHECK_FALSE(is_apn(f, 2));  // planar beats APN but is not APN
    CHECK_FALSE(is_apn(f, 1));
    CHECK_FALSE(is_apn(f, 7));
}

TEST_CASE("fast derivative table matches direct polynomial arithmetic") {
    for (auto [p, n] : {std::pair{3u, 3u}, {3u, 4u}, {5u, 2u}, {7u, 2u}}) {
        const Field f = field_new(p, n);
        for (std::uint64_t d : std::vector<std::uint64_t>{1, 2, 4, 7, 8, f->q() - 1}) {
            const FiberTable fast = reduced_derivative_table(f, d);
            const FiberTable direct = derivative_fiber_table(f, d, one(f));
            REQUIRE(fast.entries.size() == direct.entries.size());
            for (std::size_t i = 0; i < fast.entries.size(); ++i) {
                CHECK(fast.entries[i].first == direct.entries[i].first);
                CHECK(fast.entries[i].second == direct.entries[i].second);
            }
        }
    }
}

TEST_CASE("digit-loop fallback agrees once a field outgrows the limb tables") {
    // 2053^2 just exceeds the limb-table budget, so this field runs the
    // division-based path; if the budget ever grows past it, the REQUIRE
    // flags that the fallback lost its coverage.
    const Field f = field_new(2053, 1);
    REQUIRE(f->pow_tables().limb_lo == 0);
    for (std::uint64_t d : {2, 3, 5}) {
        const FiberTable fast = reduced_derivative_table(f, d);
        const FiberTable direct = derivative_fiber_table(f, d, one(f));
        REQUIRE(fast.entries.size() == direct.entries.size());
        for (std::size_t i = 0; i < fast.entries.size(); ++i)
            CHECK(fast.entries[i].second == direct.entries[i].second);
    }
    CHECK(is_apn(f, 3));  // x^3 over a prime field beyond char 3
    CHECK(differential_uniformity(f, 2) == 1);
}

TEST_CASE("fiber tables account for every domain point") {
    const Field f = field_new(3, 3);
    for (std::uint64_t d : {1, 4, 8, 13, 26}) {
        const FiberTable t = reduced_derivative_table(f, d);
        CHECK(t.entries.size() == f->q());
        std::uint64_t total = 0;
        for (const auto& [c, count] : t.entries) total += count;
        CHECK(total == f->q());
        // at() addresses by value, not position
        CHECK(t.at(t.entries[5].first) == t.entries[5].second);
    }
    CHECK_THROWS_AS(reduced_derivative_table(f, 0), std::invalid_argument);
}

TEST_CASE("full spectrum is the reduced one scaled for power maps") {
    const Field f = field_new(3, 3);
    for (std::uint64_t d : {1, 2, 7, 8, 20, 26}) {
        CHECK(full_spectrum(f, d) == reduced_spectrum(f, d).scaled(f->q() - 1));
        CHECK(full_spectrum(f, d) == full_spectrum_brute_force(f, d));
    }
    const Field f9 = field_new(3, 2);
    for (std::uint64_t d = 1; d <= 8; ++d)
        CHECK(full_spectrum(f9, d) == full_spectrum_brute_force(f9, d));
}

TEST_CASE("derivative rejects a zero step") {
    const Field f = field_new(3, 3);
    auto cube = [](const FieldElement& x) { return x.pow(3); };
    CHECK_THROWS_AS(discrete_derivative(cube, zero(f)), std::invalid_argument);
    const auto df = discrete_derivative(cube, one(f));
    // x^3 is additive, so its derivative is the constant 1
    for (const FieldElement& x : all_elements(f)) CHECK(df(x) == one(f));
}

TEST_CASE("generic fiber table validates the codomain") {
    const Field f27 = field_new(3, 3);
    const Field f9 = field_new(3, 2);
    const auto domain = all_elements(f27);
    CHECK_THROWS_AS(fiber_table(f9, domain, [](const FieldElement& x) { return x; }),
                    std::invalid_argument);
    const FiberTable t =
        fiber_table(f27, domain, [](const FieldElement& x) { return x.pow(2); });
    CHECK(t.at(zero(f27)) == 1);
    CHECK(t.spectrum() == ms({{0, 13}, {1, 1}, {2, 13}}));  // squares hit twice
}

TEST_CASE("spectra are invariant under pre- and post-composed permutations") {
    const Field f = field_new(3, 3);
    auto g = [](const FieldElement& x) { return x.pow(8); };

    std::vector<FieldElement> add_one;
    std::vector<FieldElement> scale;
    const FieldElement two = constant(f, 2);
    for (const FieldElement& x : all_elements(f)) {
        add_one.push_back(x + one(f));
        scale.push_back(two * x);
    }
    CHECK(multiset_equal_under_permutation(f, g, add_one, ComposeSide::pre));
    CHECK(multiset_equal_under_permutation(f, g, add_one, ComposeSide::post));
    CHECK(multiset_equal_under_permutation(f, g, scale, ComposeSide::pre));
    CHECK(multiset_equal_under_permutation(f, g, scale, ComposeSide::post));

    std::vector<FieldElement> broken(f->q(), zero(f));
    CHECK_THROWS_AS(multiset_equal_under_permutation(f, g, broken, ComposeSide::pre),
                    std::invalid_argument);
    std::vector<FieldElement> short_table{one(f)};
    CHECK_THROWS_AS(multiset_equal_under_permutation(f, g, short_table, ComposeSide::post),
                    std::invalid_argument);
}

TEST_CASE("reflection symmetry of odd-exponent derivatives") {
    const Field f = field_new(3, 3);
    CHECK(reflection_symmetry_holds(f, 7));
    CHECK(reflection_symmetry_holds(f, 13));
    CHECK_THROWS_AS(reflection_symmetry_holds(f, 8), std::invalid_argument);
}
