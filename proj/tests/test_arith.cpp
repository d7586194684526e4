#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "steinitz/arith.hpp"

using namespace steinitz;

TEST_CASE("l_part picks the exact prime power") {
    CHECK(l_part(factorize(12), 2) == 4);
    CHECK(l_part(factorize(12), 5) == 1);
    CHECK(l_part(factorize(360), 3) == 9);
    CHECK_THROWS_AS(l_part(factorize(12), 4), domain_error);
}

TEST_CASE("gcd-divisibility lemma values") {
    // e=6, m=6: terms (2-1)*6/2 = 3 and (3-1)*6/3 = 4.
    CHECK(mcd_lemma_gcd(factorize(6), 6) == 1);
    CHECK(mcd_lemma_gcd(factorize(2), 4) == 2);
    CHECK(mcd_lemma_gcd(factorize(1), 5) == 0);
    CHECK_THROWS_AS(mcd_lemma_gcd(factorize(4), 6), domain_error);
}

TEST_CASE("gcd-divisibility sweep up to 400") {
    for (i64 m = 1; m <= 400; ++m)
        for (i64 e = 1; e <= m; ++e)
            if (m % e == 0) mcd_lemma_gcd(factorize(e), m);  // throws on violation
}

TEST_CASE("bezout decomposition satisfies its identity") {
    auto check_identity = [](i64 e, i64 m) {
        auto b = bezout_decompose(factorize(e), m);
        i64 lhs = 0;
        for (const auto& [l, bl] : b) lhs += bl * (l - 1) * (m / l_part(factorize(e), l));
        CHECK(lhs == (e - 1) * (m / e));
    };
    check_identity(6, 6);
    check_identity(2, 2);
    check_identity(15, 30);
    for (i64 m = 2; m <= 60; ++m)
        for (i64 e = 2; e <= m; ++e)
            if (m % e == 0) check_identity(e, m);
    CHECK_THROWS_AS(bezout_decompose(factorize(1), 5), domain_error);
    CHECK_THROWS_AS(bezout_decompose(factorize(4), 6), domain_error);
}

TEST_CASE("bezout single-prime case is forced") {
    auto b = bezout_decompose(factorize(2), 2);
    CHECK(b.size() == 1);
    CHECK(b.at(2) == 1);
}

TEST_CASE("congruence power rule") {
    CHECK(congruence_power(4, 3, 9));
    CHECK(mod_pow(4, 9, 27) == 1);
    CHECK_FALSE(congruence_power(1, 5, 7));
    CHECK(congruence_power(3, 2, 4));
    CHECK(mod_pow(3, 4, 8) == 1);
    // Negative x reduced correctly.
    CHECK(congruence_power(-2, 3, 3));
}

TEST_CASE("congruence sweep to 30") {
    for (i64 x = 1; x <= 30; ++x)
        for (i64 m = 1; m <= 30; ++m)
            for (i64 n = 1; n <= 30; ++n) congruence_power(x, m, n);
}

TEST_CASE("invariant factor normalization") {
    CHECK(invariant_factors({2, 4}) == std::vector<i64>{4, 2});
    CHECK(invariant_factors({6, 4}) == std::vector<i64>{12, 2});
    CHECK(invariant_factors({3}) == std::vector<i64>{3});
    CHECK(invariant_factors({1, 1}) == std::vector<i64>{1});
    CHECK(invariant_factors({2, 3}) == std::vector<i64>{6});
    CHECK_THROWS_AS(invariant_factors({}), domain_error);
}

TEST_CASE("invariant factors preserve l-part multisets and divisibility") {
    std::vector<std::vector<i64>> inputs = {
        {8, 12, 30}, {9, 27, 3}, {2, 2, 2, 2}, {100, 10}, {7, 5, 3, 2}};
    for (const auto& in : inputs) {
        auto out = invariant_factors(in);
        for (size_t i = 0; i + 1 < out.size(); ++i) CHECK(out[i] % out[i + 1] == 0);
        i128 pin = 1, pout = 1;
        for (i64 v : in) pin *= v;
        for (i64 v : out) pout *= v;
        CHECK(pin == pout);
    }
}

TEST_CASE("kronecker symbol agrees with Euler criterion") {
    for (i64 p : {3, 5, 7, 11, 13, 97}) {
        for (i64 a = -30; a <= 30; ++a) {
            if (a % p == 0) {
                CHECK(kronecker(a, p) == 0);
                continue;
            }
            i64 euler = mod_pow(((a % p) + p) % p, (p - 1) / 2, p);
            CHECK(kronecker(a, p) == (euler == 1 ? 1 : -1));
        }
    }
}

TEST_CASE("sqrt_mod finds roots") {
    for (i64 p : {3, 5, 7, 13, 41, 61, 10007}) {
        for (i64 a = 0; a < std::min<i64>(p, 80); ++a) {
            auto r = sqrt_mod(a, p);
            if (r) CHECK((*r * *r) % p == a % p);
            else CHECK(kronecker(a, p) == -1);
        }
    }
}

TEST_CASE("factorize handles a large prime cofactor") {
    auto f = factorize(1000003);  // prime just above the sieve usage range
    CHECK(f.factors.size() == 1);
    CHECK(f.factors[0].first == 1000003);
    CHECK(perfect_sqrt(144) == 12);
    CHECK_FALSE(perfect_sqrt(145).has_value());
}
