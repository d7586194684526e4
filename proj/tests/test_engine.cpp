#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "steinitz/engine.hpp"

using namespace steinitz;

namespace {
Engine make_engine(i64 d) { return Engine(ClassGroup(make_field(d)), SamplePolicy{}); }

AbelianGroupSpec G(std::vector<i64> fs) { return AbelianGroupSpec::from_orders(fs); }
}  // namespace

TEST_CASE("group spec normalization and eta") {
    auto g = G({2, 4});
    CHECK(g.factors == std::vector<i64>{4, 2});
    CHECK(g.order == 8);
    CHECK(g.eta == 1);  // noncyclic 2-Sylow
    CHECK(G({6}).eta == 2);
    CHECK(G({3}).eta == 1);
    CHECK(G({4}).n1(2) == 4);
    CHECK(G({4}).n2(2) == 1);
    CHECK(G({12, 2}).n_of(2) == 8);
}

TEST_CASE("odd order formula") {
    auto e = make_engine(-5);
    auto triv = e.realizable_odd(G({1}));
    CHECK(triv.exact);
    CHECK(triv.lower.order() == 1);

    // C(3) over Q(sqrt(-5)): exponent 1, so the value is W(3) = whole group.
    auto c3 = e.realizable_odd(G({3}));
    CHECK(c3.exact);
    CHECK(c3.lower == Subgroup::whole(e.class_group().group()));

    // C(9): exponent (3-1)/2 * 9/9 = 1.
    auto c9 = e.realizable_odd(G({9}));
    CHECK(c9.exact);
    CHECK(c9.lower == e.w(9).subgroup);

    CHECK_THROWS_AS(e.realizable_odd(G({2})), domain_error);
}

TEST_CASE("cyclic two-power bounds") {
    auto e = make_engine(-5);
    auto whole = Subgroup::whole(e.class_group().group());
    auto triv = Subgroup::trivial(e.class_group().group());

    auto s1 = e.two_cyclic_bounds(1);
    CHECK(s1.exact);
    CHECK(s1.lower == whole);

    auto s2 = e.two_cyclic_bounds(2);
    CHECK_FALSE(s2.exact);
    CHECK(s2.lower == triv);  // W(-5, 4) is trivial
    CHECK(s2.upper == whole);

    // Caller-supplied upper equal to the lower bound collapses the interval.
    TwoCyclicOracle pin;
    pin.upper = s2.lower;
    auto pinned = e.two_cyclic_bounds(2, pin);
    CHECK(pinned.exact);

    // Supplied upper that misses the lower bound is inconsistent.
    TwoCyclicOracle bad;
    bad.extra_lower = whole;
    bad.upper = triv;
    CHECK_THROWS_AS(e.two_cyclic_bounds(2, bad), consistency_error);
    CHECK_THROWS_AS(e.two_cyclic_bounds(0), domain_error);
}

TEST_CASE("even formula: matching two-parts are exact") {
    for (i64 d : {-5, -23, -14, -163, -31, -47}) {
        auto e = make_engine(d);
        auto r = e.realizable_even(G({2, 2}));
        CHECK(r.exact);
        CHECK(r.lower == Subgroup::whole(e.class_group().group()));
    }
}

TEST_CASE("even formula: C(2) through the two-power path") {
    for (i64 d : {-5, -23, -14, -31, -47}) {
        auto e = make_engine(d);
        auto r = e.realizable(G({2}));
        CHECK(r.exact);
        CHECK(r.lower == Subgroup::whole(e.class_group().group()));
    }
}

TEST_CASE("C(6) over Q(sqrt(-5)) collapses to the whole group") {
    auto e = make_engine(-5);
    auto r = e.realizable(G({6}));
    CHECK(r.exact);
    CHECK(r.lower == Subgroup::whole(e.class_group().group()));
}

TEST_CASE("C(4) x C(2) over Q(sqrt(-5)): interval collapses to trivial") {
    auto e = make_engine(-5);
    auto r = e.realizable(G({4, 2}));
    CHECK(r.exact);
    CHECK(r.lower == Subgroup::trivial(e.class_group().group()));
    CHECK(r.upper == Subgroup::trivial(e.class_group().group()));
}

TEST_CASE("C(4) over Q(sqrt(-5)) stays an honest interval") {
    auto e = make_engine(-5);
    auto r = e.realizable(G({4}));
    CHECK_FALSE(r.exact);
    CHECK(r.lower.order() == 1);
    CHECK(r.upper.order() == 2);
}

TEST_CASE("even dispatch rejects odd orders") {
    auto e = make_engine(-5);
    CHECK_THROWS_AS(e.realizable_even(G({3})), domain_error);
}

TEST_CASE("alternate even auxiliary factor is reported when it differs") {
    // C(4) x C(2) over Q(sqrt(-17)): the mod-4 norm condition cuts the class
    // group down to its squares, so W(4)^2 and W(2)^2 differ.
    auto e = make_engine(-17);
    CHECK(e.w(2).subgroup.order() == 4);
    CHECK(e.w(4).subgroup.order() == 2);
    auto r = e.realizable(G({4, 2}), {}, true);
    REQUIRE(r.variant_note.has_value());
    auto base = e.realizable(G({4, 2}));
    CHECK_FALSE(base.variant_note.has_value());
    CHECK(base.lower == r.lower);
    CHECK(base.upper == r.upper);
}

TEST_CASE("special groups") {
    for (i64 d : {-5, -23, -14, -31, -47}) {
        auto e = make_engine(d);
        auto whole = Subgroup::whole(e.class_group().group());
        SpecialGroupSpec a4{SpecialGroupSpec::Kind::A4, 0, {}};
        auto ra4 = e.realizable_special(a4);
        CHECK(ra4.exact);
        CHECK(ra4.lower == whole);
    }
    auto e = make_engine(-5);
    auto whole = Subgroup::whole(e.class_group().group());

    SpecialGroupSpec d6{SpecialGroupSpec::Kind::Dihedral2n, 3, {}};
    auto rd6 = e.realizable_special(d6);
    CHECK(rd6.exact);
    CHECK(rd6.lower == whole);

    SpecialGroupSpec c2v{SpecialGroupSpec::Kind::TwoVecSemidirect, 2, G({3})};
    auto rc = e.realizable_special(c2v);
    CHECK(rc.exact);
    CHECK(rc.lower == whole);

    SpecialGroupSpec bad{SpecialGroupSpec::Kind::TwoVecSemidirect, 1, G({3})};
    CHECK_THROWS_AS(e.realizable_special(bad), unsupported_error);
    SpecialGroupSpec badn{SpecialGroupSpec::Kind::Dihedral2n, 4, {}};
    CHECK_THROWS_AS(e.realizable_special(badn), domain_error);
    SpecialGroupSpec badodd{SpecialGroupSpec::Kind::TwoVecSemidirect, 2, G({2})};
    CHECK_THROWS_AS(e.realizable_special(badodd), domain_error);
}

TEST_CASE("dihedral uses the plus-minus condition per element order") {
    auto e = make_engine(-47);  // class group C(5)
    SpecialGroupSpec d18{SpecialGroupSpec::Kind::Dihedral2n, 9, {}};
    auto r = e.realizable_special(d18);
    CHECK(r.exact);
    // Cl^9 = Cl for h = 5; the rotation factors only enlarge, so whole group.
    CHECK(r.lower == Subgroup::whole(e.class_group().group()));
}

TEST_CASE("dihedral where the base exponent kills the class group") {
    auto e = make_engine(-47);  // class group C(5)
    SpecialGroupSpec d10{SpecialGroupSpec::Kind::Dihedral2n, 5, {}};
    auto r = e.realizable_special(d10);
    // Cl^5 is trivial on C(5), so the value reduces to the rotation factor
    // W+-(5)^8, and the eighth power is a bijection on 5-torsion.
    CHECK(r.lower == power(e.w(5, true).subgroup, 8));
    CHECK(r.lower == e.w(5, true).subgroup);
}

TEST_CASE("empirical lower bounds feed the two-power interval") {
    auto e = make_engine(-5);
    auto whole = Subgroup::whole(e.class_group().group());
    TwoCyclicOracle oracle;
    oracle.extra_lower = whole;  // as if realized classes had been supplied
    auto r = e.two_cyclic_bounds(2, oracle);
    CHECK(r.exact);
    CHECK(r.lower == whole);
    // The oracle flows through the dispatcher and the recomposition alike.
    auto g = G({4});
    auto disp = e.realizable(g, oracle);
    CHECK(disp.exact);
    auto rec = e.sylow_recompose(g, oracle);
    CHECK(rec.lower == disp.lower);
}

TEST_CASE("sylow recomposition agrees with the dispatcher") {
    auto e5 = make_engine(-5);
    for (auto fs : std::vector<std::vector<i64>>{{6}, {2}, {12, 2}, {15}, {4, 2}, {9, 3}}) {
        auto r = e5.sylow_recompose(G(fs));
        auto d = e5.realizable(G(fs));
        CHECK(r.lower == d.lower);
        CHECK(r.upper == d.upper);
    }
}

TEST_CASE("tower combinator") {
    FinAbGroup g({4});
    auto x = make_elem(g, {1});
    auto y = make_elem(g, {2});
    CHECK(steinitz_tower(g, x, 1, zero_elem(g)) == x);
    CHECK(steinitz_tower(g, zero_elem(g), 7, y) == y);
    auto two = make_elem(g, {2});
    CHECK(steinitz_tower(g, two, 2, y) == y);  // square of an order-2 class vanishes
}

TEST_CASE("analytic upper bound") {
    auto e = make_engine(-5);
    auto whole = Subgroup::whole(e.class_group().group());
    // Odd groups: coincides with the exact value.
    CHECK(e.upper_bound_analytic(G({9})) == e.realizable_odd(G({9})).lower);
    CHECK(e.upper_bound_analytic(G({2, 2})) == whole);
    CHECK(e.upper_bound_analytic(G({2})) == whole);
    // Contains the exact value in the matching-two-part case.
    auto g = G({2, 2});
    CHECK(e.upper_bound_analytic(g).contains(e.realizable(g).lower));
}

TEST_CASE("all exponents stay integral across a group sweep") {
    auto e = make_engine(-23);
    for (i64 n1 : {2, 3, 4, 6, 8, 12}) {
        for (i64 n2 : {1, 2, 3, 4}) {
            if (n1 % n2 != 0) continue;
            auto g = G({n1, n2});
            auto r = e.realizable(g);  // throws on any fractional exponent
            CHECK(r.upper.contains(r.lower));
            e.upper_bound_analytic(g);
        }
    }
}
