#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "apn/chain.hpp"
#include "apn/gf.hpp"
#include "apn/spectra.hpp"
#include "apn/tower.hpp"

using namespace apn;
using chain::ChainContext;
using gf::FieldElement;
using tower::TowerElement;

TEST_CASE("context derives the family exponent") {
    const ChainContext c32 = chain::chain_context(3, 2);
    CHECK(c32.d1 == 14);
    CHECK(c32.d2 == 5);
    CHECK(c32.e2 == 4);
    CHECK(c32.d == 8);
    CHECK(c32.F->q() == 27);
    CHECK(c32.T->order() == 729);

    CHECK(chain::chain_context(5, 2).d == 218);
    CHECK(chain::chain_context(5, 4).d == 62);
    CHECK(chain::chain_context(7, 2).d == 656);
}

TEST_CASE("context rejects violated hypotheses by name") {
    CHECK_THROWS_AS(chain::chain_context(4, 2), std::invalid_argument);  // n even
    CHECK_THROWS_AS(chain::chain_context(3, 3), std::invalid_argument);  // k odd
    CHECK_THROWS_AS(chain::chain_context(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(chain::chain_context(3, 6), std::invalid_argument);  // gcd(n,k)=3
    CHECK_THROWS_AS(chain::chain_context(gf::field_new(5, 3), 2), std::invalid_argument);

    CHECK_THROWS_WITH_AS(chain::chain_context(3, 6), doctest::Contains("coprime"),
                         std::invalid_argument);
}

TEST_CASE("derivative fibers match the closed form") {
    const ChainContext ctx = chain::chain_context(3, 2);
    const chain::FiberComparison cmp = chain::verify_derivative_fibers(ctx);
    CHECK(cmp.all_match);
    CHECK(cmp.records.size() == 27);
    // prime-subfield values have singleton fibers
    for (const auto& r : cmp.records)
        if (r.c == gf::zero(ctx.F) || r.c == gf::one(ctx.F) || r.c == gf::constant(ctx.F, 2))
            CHECK(r.brute == 1);
    CHECK(chain::predicted_spectrum(ctx) == spectra::reduced_spectrum(ctx.F, ctx.d));
}

TEST_CASE("pi, sigma and tau are permutations") {
    const ChainContext ctx = chain::chain_context(3, 2);
    const auto elems = gf::all_elements(ctx.F);
    for (auto fn : {&chain::pi, &chain::sigma_perm, &chain::tau_perm}) {
        std::vector<FieldElement> image;
        for (const auto& x : elems) image.push_back(fn(ctx, x));
        std::sort(image.begin(), image.end());
        CHECK(std::equal(image.begin(), image.end(), elems.begin()));
    }
    // pi swaps 0 and 1 and fixes no inverse pair structure otherwise
    CHECK(chain::pi(ctx, gf::zero(ctx.F)) == gf::one(ctx.F));
    CHECK(chain::pi(ctx, gf::one(ctx.F)) == gf::constant(ctx.F, 2));
}

TEST_CASE("substitution chain preserves fiber multisets") {
    for (auto [n, k] : {std::pair{3u, 2u}, {5u, 2u}}) {
        const ChainContext ctx = chain::chain_context(n, k);
        const auto specs = chain::chain_spectra(ctx);
        REQUIRE(specs.size() == 5);
        for (const auto& s : specs) CHECK(s == specs.front());
        CHECK(specs.front() == chain::predicted_spectrum(ctx));
    }
}

TEST_CASE("f4 is f3 after the affine substitution") {
    const ChainContext ctx = chain::chain_context(3, 2);
    for (const auto& x : gf::all_elements(ctx.F))
        CHECK(chain::f4(ctx, x) == chain::f3(ctx, chain::tau_perm(ctx, x)));
}

TEST_CASE("f1 and f2 take the healed value at 1") {
    const ChainContext ctx = chain::chain_context(3, 2);
    CHECK(chain::f1(ctx, gf::one(ctx.F)) == gf::one(ctx.F));
    CHECK(chain::f2(ctx, gf::one(ctx.F)) == gf::one(ctx.F));
    // f1(0) = (0^d - 1)/(0 - 1)^d = -1/1 with d even
    CHECK(chain::f1(ctx, gf::zero(ctx.F)) == gf::constant(ctx.F, -1));
}

TEST_CASE("mu, kappa, lambda domains") {
    const ChainContext ctx = chain::chain_context(3, 2);
    CHECK_THROWS_AS(chain::mu(tower::zero(ctx.T)), std::invalid_argument);
    CHECK_THROWS_AS(chain::kappa(gf::zero(ctx.F)), std::invalid_argument);
    // a base element lies on the unit circle only when a^2 = 1, so a generator
    // of F* is off it (note 2 = -1 in char 3 IS on the circle)
    CHECK_THROWS_AS(chain::lambda(tower::embed(ctx.T, gf::primitive_element(ctx.F))),
                    std::invalid_argument);
    // on the overlap F* . U_E = {1,-1} the three maps agree
    const TowerElement e_one = tower::one(ctx.T);
    CHECK(chain::mu(e_one) == tower::embed(ctx.T, chain::kappa(gf::one(ctx.F))));
    CHECK(chain::lambda(e_one) == chain::kappa(gf::one(ctx.F)));
}

TEST_CASE("mu double cover of the base field") {
    const ChainContext ctx = chain::chain_context(3, 2);
    const auto two = gf::constant(ctx.F, 2);
    const auto minus_two = gf::constant(ctx.F, -2);

    CHECK(chain::mu_fiber(ctx.T, two) == std::vector<TowerElement>{tower::one(ctx.T)});
    CHECK(chain::mu_fiber(ctx.T, minus_two) == std::vector<TowerElement>{-tower::one(ctx.T)});

    // preimage of the base field is exactly F* union U_E
    std::vector<TowerElement> preimage;
    for (const auto& x : tower::nonzero_elements(ctx.T))
        if (chain::mu(x).in_base()) preimage.push_back(x);
    std::vector<TowerElement> expected = tower::unit_circle_elements(ctx.T);
    for (const auto& a : gf::nonzero_elements(ctx.F)) expected.push_back(tower::embed(ctx.T, a));
    std::sort(expected.begin(), expected.end());
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    CHECK(preimage == expected);

    // fiber sizes 1/2/2 by class
    for (const auto& c : gf::all_elements(ctx.F)) {
        const auto fiber = chain::mu_fiber(ctx.T, c);
        switch (chain::classify_c(c)) {
            case chain::CClass::G: CHECK(fiber.size() == 1); break;
            case chain::CClass::H:
            case chain::CClass::I: CHECK(fiber.size() == 2); break;
        }
    }
    CHECK(chain::classify_c(two) == chain::CClass::G);
    CHECK(chain::classify_c(gf::one(ctx.F)) == chain::CClass::G);  // 1 = -2 in char 3
    CHECK(chain::classify_c(gf::zero(ctx.F)) == chain::CClass::I);
}

TEST_CASE("averaging identity for f4 and for arbitrary maps") {
    const ChainContext ctx = chain::chain_context(3, 2);
    CHECK(chain::fiber_average_check(
        ctx, [&](const FieldElement& x) { return chain::f4(ctx, x); }));

    const auto elems = gf::all_elements(ctx.F);
    std::mt19937_64 rng(0x5eed);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<FieldElement> table;
        for (std::uint64_t i = 0; i < ctx.F->q(); ++i)
            table.push_back(elems[rng() % ctx.F->q()]);
        CHECK(chain::fiber_average_check(ctx, [&](const FieldElement& x) {
            return table[gf::canonical_rank(x)];
        }));
    }
}

TEST_CASE("kappa and lambda cover counts match brute force") {
    for (auto [n, k] : {std::pair{3u, 2u}, {5u, 2u}, {5u, 4u}}) {
        const ChainContext ctx = chain::chain_context(n, k);
        CHECK(chain::verify_kappa_fibers(ctx).all_match);
        CHECK(chain::verify_lambda_fibers(ctx).all_match);
        CHECK(chain::verify_f4_fibers(ctx).all_match);
    }
}

TEST_CASE("closed-form sign tables") {
    CHECK(chain::f4_mu_sign(3, 2, 2) == 1);   // same parity
    CHECK(chain::f4_mu_sign(3, 3, 2) == -1);  // 3 = 3 mod 8, parities differ
    CHECK(chain::f4_mu_sign(5, 1, 0) == -1);  // 5 = 5 mod 8
    CHECK(chain::f4_mu_sign(7, 1, 0) == 1);   // 7 = 7 mod 8: 2 is a square
    CHECK(chain::f4_mu_sign(17, 1, 0) == 1);  // 1 mod 8

    CHECK(chain::negation_sign(3, 1) == -1);
    CHECK(chain::negation_sign(3, 2) == 1);
    CHECK(chain::negation_sign(5, 1) == 1);
    CHECK(chain::negation_sign(7, 1) == -1);
    CHECK(chain::negation_sign(7, 2) == 1);
}

TEST_CASE("binomial and Laurent difference identities") {
    const gf::Field f27 = gf::field_new(3, 3);
    const tower::Tower t27 = tower::tower_new(f27);
    for (std::uint32_t j = 0; j <= 4; ++j) {
        CHECK(chain::binomial_difference_identity(f27, j));
        CHECK(chain::binomial_difference_identity(t27, j));
        CHECK(chain::laurent_difference_identity(f27, j));
        CHECK(chain::laurent_difference_identity(t27, j));
        CHECK(chain::polynomial_identity_checks(t27, j));
    }
    // other characteristics
    for (std::uint32_t p : {5u, 7u}) {
        const gf::Field f = gf::field_new(p, 1);
        const tower::Tower t = tower::tower_new(f);
        for (std::uint32_t j = 0; j <= 3; ++j) {
            CHECK(chain::binomial_difference_identity(f, j));
            CHECK(chain::laurent_difference_identity(t, j));
        }
    }
}

TEST_CASE("f4 through mu has the closed form with the right sign") {
    const gf::Field f27 = gf::field_new(3, 3);
    const tower::Tower t27 = tower::tower_new(f27);
    // j,k free; k must keep (3^k+1)/2 invertible mod 26
    CHECK(chain::f4_mu_identity_check(t27, 2, 2));  // sign +1
    CHECK(chain::f4_mu_identity_check(t27, 3, 2));  // sign -1
    CHECK(chain::f4_mu_identity_check(t27, 1, 2));
    CHECK(chain::f4_mu_identity_check(t27, 4, 0));
    CHECK_THROWS_AS(chain::f4_mu_identity_check(t27, 2, 1), std::invalid_argument);  // d2 = 2

    // sign branches in characteristics 5 and 7
    const tower::Tower t5 = tower::tower_new(gf::field_new(5, 1));
    const tower::Tower t7 = tower::tower_new(gf::field_new(7, 1));
    CHECK(chain::f4_mu_identity_check(t5, 1, 0));
    CHECK(chain::f4_mu_identity_check(t7, 1, 0));

    CHECK(chain::f4_mu_symmetry_check(t27, 1, 2));
    CHECK(chain::f4_mu_symmetry_check(t27, 2, 2));
    CHECK(chain::f4_mu_symmetry_check(t27, 3, 2));
    CHECK(chain::f4_mu_symmetry_check(t5, 1, 0));
}

TEST_CASE("fiber structure of the covers") {
    for (auto [n, k] : {std::pair{3u, 2u}, {5u, 2u}}) {
        const ChainContext ctx = chain::chain_context(n, k);
        CHECK(chain::kappa_cover_closed_form(ctx));
        CHECK(chain::lambda_cover_closed_form(ctx));
        CHECK(chain::lambda_cover_square_identity(ctx));
        CHECK(chain::lambda_ratio_square_is_nonresidue(ctx));
        CHECK(chain::equal_ratio_implies_pair(ctx));
        CHECK(chain::negated_ratio_implies_pair(ctx));
        CHECK(chain::lambda_fiber_over_zero_is_pm_i(ctx));
        CHECK(chain::kappa_fibers_are_inverse_pairs(ctx));
        CHECK(chain::lambda_fibers_are_inverse_pairs(ctx));
        CHECK(chain::fiber_structure_checks(ctx));
    }
}
