#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "apn/gf.hpp"

using namespace apn::gf;

// Lexicographically first monic irreducibles, frozen from an independent
// sieve over all monic polynomials in canonical (constant-first) order.
TEST_CASE("defining polynomials are the lex-first irreducibles") {
    CHECK(describe(field_new(3, 1)) == "3^1:0,1");
    CHECK(describe(field_new(3, 2)) == "3^2:1,0,1");
    CHECK(describe(field_new(3, 3)) == "3^3:1,0,2,1");
    CHECK(describe(field_new(3, 4)) == "3^4:1,0,1,1,1");
    CHECK(describe(field_new(3, 5)) == "3^5:1,0,0,0,2,1");
    CHECK(describe(field_new(3, 6)) == "3^6:1,0,0,0,1,1,1");
    CHECK(describe(field_new(3, 7)) == "3^7:1,0,0,0,0,1,2,1");
    CHECK(describe(field_new(3, 9)) == "3^9:1,0,0,0,0,0,2,1,0,1");
    CHECK(describe(field_new(5, 1)) == "5^1:0,1");
    CHECK(describe(field_new(5, 2)) == "5^2:1,1,1");
    CHECK(describe(field_new(7, 1)) == "7^1:0,1");
    CHECK(describe(field_new(7, 2)) == "7^2:1,0,1");
}

TEST_CASE("lex-smallest primitive elements") {
    CHECK(primitive_element(field_new(3, 1)).coeffs() == std::vector<std::uint32_t>{2});
    CHECK(primitive_element(field_new(3, 2)).coeffs() == std::vector<std::uint32_t>{1, 1});
    CHECK(primitive_element(field_new(3, 3)).coeffs() == std::vector<std::uint32_t>{0, 0, 2});
    CHECK(primitive_element(field_new(3, 5)).coeffs() ==
          std::vector<std::uint32_t>{0, 0, 0, 0, 2});
    CHECK(primitive_element(field_new(5, 1)).coeffs() == std::vector<std::uint32_t>{2});
    CHECK(primitive_element(field_new(7, 1)).coeffs() == std::vector<std::uint32_t>{3});
}

TEST_CASE("primitive element has full multiplicative order") {
    for (auto f : {field_new(3, 3), field_new(3, 4), field_new(5, 2), field_new(7, 2)}) {
        const FieldElement g = primitive_element(f);
        std::set<std::vector<std::uint32_t>> powers;
        FieldElement cur = one(f);
        for (std::uint64_t i = 0; i + 1 < f->q(); ++i) {
            powers.insert(cur.coeffs());
            cur = cur * g;
        }
        CHECK(powers.size() == f->q() - 1);
        CHECK(cur == one(f));  // g^(q-1) = 1
    }
}

TEST_CASE("field construction rejects bad parameters") {
    CHECK_THROWS_AS(field_new(2, 3), std::invalid_argument);   // even characteristic
    CHECK_THROWS_AS(field_new(9, 2), std::invalid_argument);   // composite
    CHECK_THROWS_AS(field_new(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(field_new(3, 30), std::invalid_argument);  // beyond the order bound
    // x^2 + 1 factors over GF(5): 1,0,1 is reducible there
    CHECK_THROWS_AS(field_new(5, 2, {1, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(field_new(3, 2, {1, 0, 2}), std::invalid_argument);  // not monic
    CHECK_THROWS_AS(field_new(3, 2, {1, 0}), std::invalid_argument);     // wrong degree
    CHECK(is_irreducible(3, {1, 0, 2, 1}));
    CHECK_FALSE(is_irreducible(3, {2, 0, 2, 1}));  // has the root x=2
    CHECK_FALSE(is_irreducible(3, {0, 0, 0, 1}));  // x^3
}

TEST_CASE("parse and describe round trip") {
    const Field f = parse_field("3^3:1,0,2,1");
    CHECK(f->q() == 27);
    CHECK(describe(f) == "3^3:1,0,2,1");
    CHECK_THROWS_AS(parse_field("3^3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_field("3^3:1,0,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_field("3^3:1,0,2,2"), std::invalid_argument);  // not monic
    CHECK_THROWS_AS(parse_field("4^2:1,1,1"), std::invalid_argument);
}

TEST_CASE("element arithmetic over GF(27)") {
    const Field f = field_new(3, 3);
    const FieldElement a = element(f, {1, 2, 0});
    const FieldElement b = element(f, {0, 1, 1});

    CHECK(a + b == element(f, {1, 0, 1}));
    CHECK(a - a == zero(f));
    CHECK(-a == element(f, {2, 1, 0}));
    CHECK(a * one(f) == a);
    CHECK(a * zero(f) == zero(f));

    // inverse and power agree with naive repeated multiplication
    for (const FieldElement& x : nonzero_elements(f)) {
        CHECK(x * x.inv() == one(f));
        FieldElement cube = x * x * x;
        CHECK(x.pow(3) == cube);
        CHECK(x.pow(-2) == (x * x).inv());
        CHECK(x.pow(26) == one(f));
    }
    CHECK(zero(f).pow(5) == zero(f));
    CHECK(zero(f).pow(0) == one(f));
    CHECK_THROWS_AS(zero(f).pow(-1), std::domain_error);
    CHECK_THROWS_AS(zero(f).inv(), std::domain_error);
}

TEST_CASE("mixing fields is rejected") {
    const Field f = field_new(3, 3);
    const Field g = field_new(3, 2);
    CHECK_THROWS_AS(one(f) + one(g), std::invalid_argument);
    // same parameters, distinct instances: still distinct fields
    const Field f2 = field_new(3, 3);
    CHECK_THROWS_AS(one(f) * one(f2), std::invalid_argument);
}

TEST_CASE("frobenius is the p-power map and fixes the prime subfield") {
    const Field f = field_new(3, 4);
    for (const FieldElement& x : all_elements(f)) {
        CHECK(x.frobenius(1) == x.pow(3));
        CHECK(x.frobenius(4) == x);  // full degree: identity
    }
    for (std::int64_t c = 0; c < 3; ++c) CHECK(constant(f, c).frobenius(1) == constant(f, c));
}

TEST_CASE("canonical order and rank") {
    const Field f = field_new(3, 3);
    const auto elems = all_elements(f);
    CHECK(elems.size() == 27);
    CHECK(elems.front() == zero(f));
    CHECK(elems[1] == element(f, {0, 0, 1}));  // lex on (c0,c1,c2): 0,0,1 follows 0,0,0
    CHECK(std::is_sorted(elems.begin(), elems.end()));
    for (std::uint64_t r = 0; r < elems.size(); ++r) CHECK(canonical_rank(elems[r]) == r);
    CHECK(nonzero_elements(f).size() == 26);
}

TEST_CASE("quadratic character") {
    const Field f = field_new(3, 3);
    std::uint64_t squares = 0;
    for (const FieldElement& x : nonzero_elements(f)) {
        const int chi = quadratic_character(x);
        CHECK((chi == 1 || chi == -1));
        if (chi == 1) ++squares;
        CHECK(quadratic_character(x * x) == 1);
    }
    CHECK(squares == 13);  // (q-1)/2
    CHECK(quadratic_character(zero(f)) == 0);
    // eta is multiplicative
    const FieldElement g = primitive_element(f);
    CHECK(quadratic_character(g) == -1);  // generators are never squares
}

TEST_CASE("power map fibers") {
    const Field f = field_new(3, 3);
    // d=4: gcd(4,26)=2, so x^4 is 2-to-1 onto its image and fibers are {a,-a}
    for (const FieldElement& a : nonzero_elements(f)) {
        const auto fiber = power_map_fiber(f, 4, a.pow(4));
        CHECK(fiber.size() == 2);
        CHECK(std::count(fiber.begin(), fiber.end(), a) == 1);
        CHECK(std::count(fiber.begin(), fiber.end(), -a) == 1);
    }
    CHECK(power_map_fiber(f, 4, zero(f)) == std::vector<FieldElement>{zero(f)});
    // d=26 = q-1: indicator of F*, fiber over 1 is everything nonzero
    CHECK(power_map_fiber(f, 26, one(f)).size() == 26);
    CHECK_THROWS_AS(power_map_fiber(f, 0, one(f)), std::invalid_argument);
}
