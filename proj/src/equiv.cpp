#include "apn/equiv.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "apn/gf.hpp"

namespace apn::equiv {

namespace {

std::uint64_t field_modulus(std::uint32_t p, std::uint32_t n) {
    if (p < 3 || p % 2 == 0 || !numth::is_prime(numth::BigInt(p)))
        throw std::invalid_argument("p must be an odd prime");
    if (n == 0) throw std::invalid_argument("n must be positive");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (q > gf::kMaxFieldOrder / p)
            throw std::invalid_argument("field order exceeds the supported bound");
        q *= p;
    }
    return q - 1;
}

// 3^e as a BigInt; exponents here stay small but products do not.
numth::BigInt pow3(std::uint32_t e) {
    numth::BigInt r = 1;
    for (std::uint32_t i = 0; i < e; ++i) r *= 3;
    return r;
}

std::uint64_t to_u64(const numth::BigInt& v) {
    return static_cast<std::uint64_t>(v);
}

}  // namespace

ExponentClass equivalence_class(std::uint64_t d, std::uint32_t p, std::uint32_t n) {
    const std::uint64_t m = field_modulus(p, n);
    d %= m;
    if (d == 0)
        throw std::invalid_argument("exponent is 0 mod p^n - 1 and names no power map");

    std::set<std::uint64_t> members;
    auto orbit = [&](std::uint64_t start) {
        std::uint64_t cur = start;
        for (std::uint32_t j = 0; j < n; ++j) {
            members.insert(cur);
            cur = numth::mul_mod(cur, p, m);
        }
    };
    orbit(d);
    if (std::gcd(d, m) == 1) orbit(numth::inverse_mod(d, m));

    ExponentClass cls;
    cls.modulus = m;
    cls.members.assign(members.begin(), members.end());
    cls.representative = cls.members.front();
    return cls;
}

bool are_equivalent(std::uint64_t d, std::uint64_t e, std::uint32_t p, std::uint32_t n) {
    const ExponentClass cls = equivalence_class(d, p, n);
    e %= cls.modulus;
    return std::binary_search(cls.members.begin(), cls.members.end(), e);
}

std::vector<ExponentClass> all_classes(std::uint32_t p, std::uint32_t n) {
    const std::uint64_t m = field_modulus(p, n);
    std::vector<ExponentClass> classes;
    std::vector<bool> seen(m, false);  // index d-1 for d in [1, m-1]
    for (std::uint64_t d = 1; d < m; ++d) {
        if (seen[d - 1]) continue;
        ExponentClass cls = equivalence_class(d, p, n);
        for (std::uint64_t e : cls.members) seen[e - 1] = true;
        classes.push_back(std::move(cls));
    }
    return classes;
}

std::uint64_t zha_wang_witness(std::uint32_t n, std::uint32_t m, std::uint64_t d) {
    if (n == 0) throw std::invalid_argument("n must be positive");
    if (m == 0) throw std::invalid_argument("m must be positive");
    if (d == 0 || d % 2 != 0) throw std::invalid_argument("d must be even and positive");
    if (std::gcd(m, n) != 1) throw std::invalid_argument("m and n must be coprime");
    if (2ull * m >= n) throw std::invalid_argument("2m < n is required");

    const numth::BigInt lhs = (pow3(m) + 1) * numth::BigInt(d) - 2;
    const numth::BigInt q1 = pow3(n) - 1;
    if (lhs <= 0 || lhs % q1 != 0)
        throw std::invalid_argument(
            "(3^m + 1) d - 2 is not a positive multiple of 3^n - 1: not a Zha-Wang instance");
    const numth::BigInt k = lhs / q1;
    if (k % 2 == 0)
        throw std::invalid_argument("witness k is even: not a Zha-Wang instance");
    return to_u64(k);
}

ZhaWangParams zha_wang_params(std::uint32_t n, std::uint32_t m, std::uint64_t d) {
    ZhaWangParams zw;
    zw.n = n;
    zw.m = m;
    zw.d = d;
    zw.k = zha_wang_witness(n, m, d);
    return zw;
}

FractionForm zha_wang_to_fraction(const ZhaWangParams& zw) {
    zha_wang_witness(zw.n, zw.m, zw.d);  // revalidate; params may be hand-built

    FractionForm fr;
    fr.n = zw.n;
    fr.j = (zw.m % 2 == 0) ? zw.m : zw.n - zw.m;

    const std::uint64_t modulus = to_u64(pow3(zw.n) - 1);
    const numth::FractionalExponent frac{(pow3(zw.n) + 1) / 2, (pow3(fr.j) + 1) / 2};
    fr.resolved = numth::resolve_exponent(frac, modulus).value;

    if (!are_equivalent(zw.d, fr.resolved, 3, zw.n))
        throw std::logic_error("Zha-Wang exponent escaped its fraction class");
    return fr;
}

ZhaWangParams fraction_to_zha_wang(std::uint32_t n, std::uint32_t j) {
    if (n == 0 || n % 2 == 0) throw std::invalid_argument("n must be odd and positive");
    if (j == 0 || j % 2 != 0) throw std::invalid_argument("j must be even and positive");
    if (std::gcd(j, n) != 1) throw std::invalid_argument("j and n must be coprime");

    const std::uint64_t modulus = to_u64(pow3(n) - 1);
    const numth::FractionalExponent frac{(pow3(n) + 1) / 2, (pow3(j) + 1) / 2};
    const std::uint64_t d = numth::resolve_exponent(frac, modulus).value;

    const std::uint32_t mp = j % n;  // j and n coprime, so mp != 0 here
    std::uint32_t m = mp;
    std::uint64_t dp = d;
    if (2ull * mp >= n) {
        m = n - mp;
        dp = numth::mul_mod(numth::pow_mod(3, mp, modulus), d % modulus, modulus);
    }
    return zha_wang_params(n, m, dp);
}

}  // namespace apn::equiv
