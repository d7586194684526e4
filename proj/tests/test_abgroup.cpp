#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "steinitz/abgroup.hpp"

using namespace steinitz;

namespace {

// Brute-force closure of a generating set, independent of the lattice code.
std::set<std::vector<i64>> closure(const FinAbGroup& g, std::vector<ClassElem> gens) {
    std::set<std::vector<i64>> seen{zero_elem(g).e};
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& x : std::set<std::vector<i64>>(seen))
            for (const auto& gen : gens) {
                auto y = add(g, ClassElem{x}, gen);
                if (seen.insert(y.e).second) grew = true;
            }
    }
    return seen;
}

}  // namespace

TEST_CASE("group construction validates the chain") {
    CHECK_THROWS_AS(FinAbGroup({4, 3}), domain_error);
    CHECK(FinAbGroup({6, 2, 1}).factors == std::vector<i64>{6, 2});
    CHECK(FinAbGroup(std::vector<i64>{}).factors == std::vector<i64>{1});
    CHECK(FinAbGroup({12, 6, 2}).order() == 144);
}

TEST_CASE("generated subgroups match brute-force closure") {
    FinAbGroup g({6, 2});
    auto a = make_elem(g, {2, 0});
    auto b = make_elem(g, {3, 1});
    auto s = generated(g, {a, b});
    auto brute = closure(g, {a, b});
    CHECK(s.order() == i64(brute.size()));
    CHECK(s.order() == 6);
    for (const auto& x : Subgroup::whole(g).enumerate())
        CHECK(s.contains(x) == (brute.count(x.e) > 0));
    // Enumeration agrees with the closure set.
    std::set<std::vector<i64>> en;
    for (const auto& x : s.enumerate()) en.insert(x.e);
    CHECK(en == brute);
}

TEST_CASE("basic generated cases") {
    FinAbGroup c2({2});
    CHECK(generated(c2, {make_elem(c2, {1})}) == Subgroup::whole(c2));
    FinAbGroup c4({4});
    auto s = generated(c4, {make_elem(c4, {2})});
    CHECK(s.order() == 2);
    CHECK_FALSE(s.contains(make_elem(c4, {1})));
    CHECK(s.contains(make_elem(c4, {2})));
    CHECK(Subgroup::trivial(c4).contains(zero_elem(c4)));
    CHECK_THROWS_AS(generated(c4, {make_elem(FinAbGroup({2, 2}), {1, 0})}), domain_error);
}

TEST_CASE("product laws") {
    FinAbGroup g({4});
    auto whole = Subgroup::whole(g);
    auto triv = Subgroup::trivial(g);
    auto half = generated(g, {make_elem(g, {2})});
    CHECK(product(triv, half) == half);
    CHECK(product(whole, half) == whole);
    CHECK(product(half, half) == half);
    CHECK_THROWS_AS(product(half, Subgroup::whole(FinAbGroup({2}))), domain_error);
}

TEST_CASE("power of subgroups") {
    FinAbGroup c2({2});
    CHECK(power(Subgroup::whole(c2), 2) == Subgroup::trivial(c2));
    FinAbGroup c4({4});
    CHECK(power(Subgroup::whole(c4), 2).order() == 2);
    FinAbGroup c6({6});
    auto cubed = power(Subgroup::whole(c6), 3);
    CHECK(cubed.order() == 2);
    // Exhaustive mapping oracle: {3x mod 6} = {0, 3}.
    std::set<std::vector<i64>> img;
    for (const auto& x : Subgroup::whole(c6).enumerate())
        img.insert(scale(c6, x, 3).e);
    std::set<std::vector<i64>> en;
    for (const auto& x : cubed.enumerate()) en.insert(x.e);
    CHECK(img == en);
    CHECK(power(Subgroup::whole(c6), 0) == Subgroup::trivial(c6));
    CHECK(power(Subgroup::whole(c6), 1) == Subgroup::whole(c6));
    CHECK_THROWS_AS(power(Subgroup::whole(c6), -1), domain_error);
}

TEST_CASE("power composes multiplicatively on exponents") {
    FinAbGroup g({12, 4});
    auto s = generated(g, {make_elem(g, {2, 1}), make_elem(g, {0, 2})});
    for (i64 m : {2, 3, 4})
        for (i64 n : {2, 3, 6})
            CHECK(power(power(s, m), n) == power(s, m * n));
}

TEST_CASE("order and enumeration caps") {
    FinAbGroup g({100, 100, 100});
    CHECK(Subgroup::whole(g).order() == 1000000);
    CHECK_THROWS_AS(Subgroup::whole(g).enumerate(), capacity_error);
}

TEST_CASE("generated is idempotent on enumerations") {
    FinAbGroup g({8, 4});
    auto s = generated(g, {make_elem(g, {2, 1})});
    CHECK(generated(g, s.enumerate()) == s);
    CHECK(generated(g, s.generators()) == s);
}

TEST_CASE("containment of subgroups") {
    FinAbGroup g({8});
    auto s4 = generated(g, {make_elem(g, {2})});
    auto s2 = generated(g, {make_elem(g, {4})});
    CHECK(s4.contains(s2));
    CHECK_FALSE(s2.contains(s4));
    CHECK(Subgroup::whole(g).contains(s4));
}

TEST_CASE("element order") {
    FinAbGroup g({12, 2});
    CHECK(elem_order(g, make_elem(g, {0, 0})) == 1);
    CHECK(elem_order(g, make_elem(g, {6, 1})) == 2);
    CHECK(elem_order(g, make_elem(g, {4, 1})) == 6);
}
