#include "steinitz/engine.hpp"

#include <algorithm>

namespace steinitz {

namespace {

i64 pow2(i64 s) {
    if (s < 0 || s > 40) throw capacity_error("pow2: exponent out of range");
    return i64(1) << s;
}

i64 log2_exact(i64 v) {
    i64 s = 0;
    while ((i64(1) << s) < v) ++s;
    if ((i64(1) << s) != v) throw domain_error("log2_exact: not a power of two");
    return s;
}

RealizableInterval mul_i(RealizableInterval a, const RealizableInterval& b) {
    a.lower = product(a.lower, b.lower);
    a.upper = product(a.upper, b.upper);
    a.exact = (a.lower == a.upper);
    a.trail.insert(a.trail.end(), b.trail.begin(), b.trail.end());
    if (!a.variant_note && b.variant_note) a.variant_note = b.variant_note;
    return a;
}

RealizableInterval pow_i(RealizableInterval a, i64 e) {
    if (e < 0) throw domain_error("interval power: negative exponent");
    a.lower = power(a.lower, e);
    a.upper = power(a.upper, e);
    a.exact = (a.lower == a.upper);
    return a;
}

std::string subgroup_brief(const Subgroup& s) {
    return "order " + std::to_string(s.order());
}

}  // namespace

RealizableInterval make_exact(const Subgroup& s, std::vector<TrailEntry> trail) {
    RealizableInterval out;
    out.lower = s;
    out.upper = s;
    out.exact = true;
    out.trail = std::move(trail);
    return out;
}

AbelianGroupSpec AbelianGroupSpec::from_orders(const std::vector<i64>& orders) {
    AbelianGroupSpec g;
    g.factors = invariant_factors(orders);
    i128 n = 1;
    for (i64 f : g.factors) n *= f;
    g.order = checked_i64(n, "AbelianGroupSpec");
    g.eta = (g.order % 2 == 0 && g.n2(2) == 1) ? 2 : 1;
    return g;
}

std::vector<i64> AbelianGroupSpec::prime_divisors() const {
    std::vector<i64> out;
    for (const auto& [p, e] : factorize(order).factors) {
        (void)e;
        out.push_back(p);
    }
    return out;
}

ClassElem steinitz_tower(const FinAbGroup& g, const ClassElem& st_E_over_k,
                         i64 deg_K_over_E, const ClassElem& norm_of_st_K_over_E) {
    return add(g, scale(g, st_E_over_k, deg_K_over_E), norm_of_st_K_over_E);
}

Engine::Engine(const ClassGroup& cg, SamplePolicy policy,
               std::optional<std::string> cache_dir)
    : cg_(cg), policy_(policy) {
    if (cache_dir && !cache_dir->empty())
        cache_ = std::make_unique<WitnessCache>(*cache_dir);
}

const WGroupResult& Engine::w(i64 modulus, bool plus_minus) const {
    auto key = std::make_pair(modulus, plus_minus);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    auto res = w_group(cg_, NormCondition{modulus, plus_minus}, policy_, cache_.get());
    return memo_.emplace(key, std::move(res)).first->second;
}

bool Engine::all_sampled_stabilized() const {
    for (const auto& [key, res] : memo_)
        if (!res.stabilized) return false;
    return true;
}

RealizableInterval Engine::realizable_odd(const AbelianGroupSpec& g) const {
    if (g.order % 2 == 0) throw domain_error("realizable_odd: order must be odd");
    RealizableInterval out = make_exact(trivial());
    if (g.order == 1) {
        out.trail.push_back({"trivial-group", "empty product"});
        return out;
    }
    for (i64 l : g.prime_divisors()) {
        i64 m = g.n1(l);
        i64 e = ((l - 1) / 2) * (g.order / m);
        Subgroup f = power(w(m).subgroup, e);
        out = mul_i(out, make_exact(f, {{"odd-order-factor",
                                         "W(" + std::to_string(m) + ")^" +
                                             std::to_string(e) + " -> " + subgroup_brief(f)}}));
    }
    return out;
}

RealizableInterval Engine::two_cyclic_bounds(i64 s, const TwoCyclicOracle& oracle) const {
    if (s < 1) throw domain_error("two_cyclic_bounds: s must be >= 1");
    if (s == 1) {
        // The modulus-2 norm condition is vacuous, so the quadratic case is
        // exactly the full class group.
        if (oracle.upper && !oracle.upper->contains(whole()))
            throw consistency_error(
                "two_cyclic_bounds: supplied upper bound does not contain the lower bound");
        return make_exact(whole(), {{"quadratic-full", "C(2): whole class group"}});
    }
    i64 m = pow2(s);
    Subgroup low = w(m).subgroup;
    if (oracle.extra_lower) low = product(low, *oracle.extra_lower);
    Subgroup up = oracle.upper ? *oracle.upper : whole();
    if (!up.contains(low))
        throw consistency_error("two_cyclic_bounds: supplied upper bound does not contain the lower bound");
    RealizableInterval out;
    out.lower = low;
    out.upper = up;
    out.exact = (low == up);
    out.trail.push_back({"two-power-lower",
                         "W(" + std::to_string(m) + ") " + subgroup_brief(low)});
    out.trail.push_back({"two-power-upper",
                         (oracle.upper ? "supplied " : "default ") + subgroup_brief(up)});
    if (!out.exact)
        out.trail.push_back({"two-power-attainment",
                             "lower bound not certified attained: no witness "
                             "constructor for cyclic 2-power extensions"});
    return out;
}

RealizableInterval Engine::realizable_even(const AbelianGroupSpec& g,
                                           const TwoCyclicOracle& oracle,
                                           bool alt_even_factor) const {
    if (g.order % 2 != 0) throw domain_error("realizable_even: order must be even");
    const i64 n = g.order;
    const i64 n12 = g.n1(2);
    const i64 n22 = g.n2(2);

    RealizableInterval out = make_exact(trivial());

    auto odd_factors = [&](RealizableInterval acc) {
        for (i64 l : g.prime_divisors()) {
            if (l == 2) continue;
            i64 m = g.n1(l);
            i64 e = ((l - 1) / 2) * (n / m);
            Subgroup f = power(w(m).subgroup, e);
            acc = mul_i(acc, make_exact(f, {{"odd-order-factor",
                                             "W(" + std::to_string(m) + ")^" +
                                                 std::to_string(e) + " -> " +
                                                 subgroup_brief(f)}}));
        }
        return acc;
    };

    if (n22 == n12) {
        // Matching first two 2-parts: the even analogue of the odd formula is
        // exact; the l = 2 exponent n / (2 n_1(2)) is integral here.
        if ((n / n12) % 2 != 0)
            throw consistency_error("realizable_even: expected even cofactor");
        i64 e2 = n / (2 * n12);
        Subgroup f2 = power(w(n12).subgroup, e2);
        out = mul_i(out, make_exact(f2, {{"even-matching-two-part",
                                          "W(" + std::to_string(n12) + ")^" +
                                              std::to_string(e2) + " -> " +
                                              subgroup_brief(f2)}}));
        return odd_factors(out);
    }

    // General even order routes through the cyclic 2-power bounds.
    if (n % n12 != 0) throw consistency_error("realizable_even: fractional exponent");
    RealizableInterval two = pow_i(two_cyclic_bounds(log2_exact(n12), oracle), n / n12);
    two.trail.push_back({"two-power-raised", "exponent " + std::to_string(n / n12)});
    out = mul_i(out, two);

    if (n22 != 1) {
        if (n % (2 * n22) != 0)
            throw consistency_error("realizable_even: fractional auxiliary exponent");
        i64 e = n / (2 * n22);
        i64 used = n22;
        Subgroup f = power(w(used).subgroup, e);
        RealizableInterval aux = make_exact(
            f, {{"even-auxiliary-factor", "W(" + std::to_string(used) + ")^" +
                                              std::to_string(e) + " -> " +
                                              subgroup_brief(f)}});
        if (alt_even_factor) {
            Subgroup altf = power(w(n12).subgroup, e);
            if (!(altf == f))
                aux.variant_note =
                    "auxiliary factor with modulus n1(2)=" + std::to_string(n12) +
                    " gives " + subgroup_brief(altf) + ", default modulus n2(2)=" +
                    std::to_string(n22) + " gives " + subgroup_brief(f);
        }
        out = mul_i(out, aux);
        out.trail.push_back({"even-general-two-part", "split two-part handled"});
    } else {
        out.trail.push_back({"even-cyclic-two-sylow", "cyclic 2-Sylow subgroup"});
    }
    return odd_factors(out);
}

RealizableInterval Engine::realizable(const AbelianGroupSpec& g,
                                      const TwoCyclicOracle& oracle,
                                      bool alt_even_factor) const {
    if (g.order % 2 == 0) return realizable_even(g, oracle, alt_even_factor);
    return realizable_odd(g);
}

RealizableInterval Engine::realizable_special(const SpecialGroupSpec& spec,
                                              const TwoCyclicOracle& oracle) const {
    (void)oracle;
    switch (spec.kind) {
        case SpecialGroupSpec::Kind::A4: {
            // (C2 x C2) acted on by C3: the formula collapses to the whole
            // class group; evaluate it and verify the collapse.
            auto r3 = realizable_odd(AbelianGroupSpec::from_orders({3}));
            Subgroup s = product(power(r3.lower, 4), power(whole(), 3));
            if (!(s == whole()))
                throw consistency_error(
                    "A4: computed subgroup differs from the full class group; "
                    "sampling may not have stabilized");
            return make_exact(
                s, {{"alternating-4", "R(C3)^4 * Cl^3 = Cl verified"}});
        }
        case SpecialGroupSpec::Kind::TwoVecSemidirect: {
            if (spec.n == 1)
                throw unsupported_error(
                    "TwoVecSemidirect: n = 1 is outside the formula's range");
            if (spec.n < 1 || spec.n > 30)
                throw domain_error("TwoVecSemidirect: n out of range");
            if (spec.odd_part.order % 2 == 0)
                throw domain_error("TwoVecSemidirect: acting group must have odd order");
            auto r = realizable_odd(spec.odd_part);
            i64 e1 = pow2(spec.n);
            i64 e2 = checked_i64(i128(spec.odd_part.order) * pow2(spec.n - 2),
                                 "TwoVecSemidirect");
            Subgroup s = product(power(r.lower, e1), power(whole(), e2));
            return make_exact(
                s, {{"elementary-2-semidirect",
                     "R(odd)^" + std::to_string(e1) + " * Cl^" + std::to_string(e2)}});
        }
        case SpecialGroupSpec::Kind::Dihedral2n: {
            if (spec.n < 3 || spec.n % 2 == 0)
                throw domain_error("Dihedral2n: n must be odd and >= 3");
            Subgroup s = power(whole(), spec.n);
            std::vector<TrailEntry> trail{
                {"dihedral-base", "Cl^" + std::to_string(spec.n)}};
            for (const auto& [l, e] : factorize(spec.n).factors) {
                i64 o = 1;
                for (int j = 1; j <= e; ++j) {
                    o *= l;
                    // Elements of each order contribute one identical factor.
                    i64 exp = (l - 1) * (2 * spec.n / o);
                    Subgroup f = power(w(o, true).subgroup, exp);
                    s = product(s, f);
                    trail.push_back({"dihedral-rotation-factor",
                                     "W+-(" + std::to_string(o) + ")^" +
                                         std::to_string(exp) + " -> " +
                                         subgroup_brief(f)});
                }
            }
            return make_exact(s, std::move(trail));
        }
    }
    throw domain_error("realizable_special: unknown kind");
}

RealizableInterval Engine::sylow_recompose(const AbelianGroupSpec& g,
                                           const TwoCyclicOracle& oracle) const {
    RealizableInterval disp = realizable(g, oracle);
    RealizableInterval total = make_exact(trivial());
    for (i64 l : g.prime_divisors()) {
        std::vector<i64> lparts;
        for (i64 f : g.factors) {
            i64 lp = l_part(f, l);
            if (lp > 1) lparts.push_back(lp);
        }
        auto gl = AbelianGroupSpec::from_orders(lparts);
        RealizableInterval il = realizable(gl, oracle);
        total = mul_i(total, pow_i(il, g.order / g.n_of(l)));
    }
    if (!(total.lower == disp.lower) || !(total.upper == disp.upper))
        throw consistency_error("sylow_recompose: product over Sylow parts disagrees "
                                "with the direct evaluation");
    total.trail.push_back({"sylow-product", "matches direct evaluation"});
    return total;
}

Subgroup Engine::upper_bound_analytic(const AbelianGroupSpec& g) const {
    const i64 n = g.order;
    Subgroup out = trivial();
    if (n == 1) return out;
    for (i64 l : g.prime_divisors()) {
        if (l == 2) continue;
        i64 m = g.n1(l);
        out = product(out, power(w(m).subgroup, ((l - 1) / 2) * (n / m)));
    }
    if (n % 2 == 0) {
        i64 n12 = g.n1(2);
        if (g.n2(2) != 1) {
            if ((n / n12) % 2 != 0)
                throw consistency_error("upper_bound_analytic: expected even cofactor");
            out = product(out, power(w(n12).subgroup, n / (2 * n12)));
        } else {
            // Cyclic 2-Sylow: the half-exponent is not integral; bound the
            // 2-part by the full class group raised to the odd cofactor.
            out = product(out, power(whole(), n / n12));
        }
    }
    return out;
}

}  // namespace steinitz
