#include "steinitz/selftest.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "steinitz/abgroup.hpp"
#include "steinitz/arith.hpp"

namespace steinitz {

namespace {

SelftestCheck mcd_sweep(i64 max_m) {
    SelftestCheck c{"gcd-divisibility-sweep", true,
                    "all e | m, m <= " + std::to_string(max_m)};
    i64 pairs = 0;
    for (i64 m = 1; m <= max_m; ++m) {
        for (i64 e = 1; e <= m; ++e) {
            if (m % e != 0) continue;
            ++pairs;
            i64 g = mcd_lemma_gcd(factorize(e), m);  // throws on violation
            if (e > 1 && g <= 0) {
                c.ok = false;
                c.detail = "nonpositive gcd at e=" + std::to_string(e) +
                           ", m=" + std::to_string(m);
                return c;
            }
        }
    }
    c.detail += " (" + std::to_string(pairs) + " pairs)";
    return c;
}

SelftestCheck congruence_sweep(i64 bound) {
    SelftestCheck c{"congruence-power-sweep", true,
                    "all hypothesis triples up to " + std::to_string(bound)};
    i64 hits = 0;
    for (i64 x = 1; x <= bound; ++x)
        for (i64 m = 1; m <= bound; ++m)
            for (i64 n = 1; n <= bound; ++n)
                if (congruence_power(x, m, n)) ++hits;  // throws on violation
    c.detail += " (" + std::to_string(hits) + " satisfied)";
    return c;
}

SelftestCheck bezout_sweep(i64 max_m) {
    SelftestCheck c{"bezout-decomposition-sweep", true,
                    "all 1 < e | m, m <= " + std::to_string(max_m)};
    for (i64 m = 2; m <= max_m; ++m)
        for (i64 e = 2; e <= m; ++e) {
            if (m % e != 0) continue;
            bezout_decompose(factorize(e), m);  // identity re-checked inside
        }
    return c;
}

std::vector<std::vector<i64>> abelian_groups_up_to(i64 max_order) {
    std::vector<std::vector<i64>> out;
    std::function<void(i64, i64, std::vector<i64>&)> rec =
        [&](i64 remaining, i64 max_factor, std::vector<i64>& acc) {
            if (remaining == 1) {
                if (!acc.empty()) out.push_back(acc);
                return;
            }
            for (i64 f = std::min(remaining, max_factor); f >= 2; --f) {
                if (remaining % f != 0) continue;
                // Keep the divisibility chain f_{i+1} | f_i.
                if (!acc.empty() && acc.back() % f != 0) continue;
                acc.push_back(f);
                rec(remaining / f, f, acc);
                acc.pop_back();
            }
        };
    for (i64 n = 2; n <= max_order; ++n) {
        std::vector<i64> acc;
        rec(n, n, acc);
    }
    out.push_back({1});
    return out;
}

SelftestCheck subgroup_laws(i64 max_order) {
    SelftestCheck c{"subgroup-lattice-laws", true,
                    "groups of order <= " + std::to_string(max_order)};
    for (const auto& factors : abelian_groups_up_to(max_order)) {
        FinAbGroup g(factors);
        auto elems = Subgroup::whole(g).enumerate();
        // Subgroups from generator subsets of size <= 3, plus the whole group.
        std::set<std::vector<std::vector<i64>>> keys;
        std::vector<Subgroup> subs;
        auto push = [&](const Subgroup& s) {
            if (keys.insert(s.basis()).second) subs.push_back(s);
        };
        push(Subgroup::trivial(g));
        push(Subgroup::whole(g));
        for (size_t i = 0; i < elems.size(); ++i) {
            push(generated(g, {elems[i]}));
            for (size_t j = i; j < elems.size(); ++j) {
                push(generated(g, {elems[i], elems[j]}));
                if (g.rank() >= 3 && elems.size() <= 40)
                    for (size_t l = j; l < elems.size(); ++l)
                        push(generated(g, {elems[i], elems[j], elems[l]}));
            }
        }
        const Subgroup triv = Subgroup::trivial(g);
        for (const auto& a : subs) {
            if (!(product(triv, a) == a)) { c.ok = false; c.detail = "identity law"; return c; }
            if (!(product(a, a) == a)) { c.ok = false; c.detail = "idempotence"; return c; }
            if (!(power(a, 1) == a)) { c.ok = false; c.detail = "power 1"; return c; }
            if (!(power(a, 0) == triv)) { c.ok = false; c.detail = "power 0"; return c; }
            if (!a.contains(power(a, 2))) { c.ok = false; c.detail = "power containment"; return c; }
            if (!(generated(g, a.enumerate()) == a)) {
                c.ok = false; c.detail = "generated idempotence"; return c;
            }
            // Membership agrees with enumeration.
            auto inside = a.enumerate();
            std::set<std::vector<i64>> inset;
            for (const auto& x : inside) inset.insert(x.e);
            for (const auto& x : elems) {
                if (a.contains(x) != (inset.count(x.e) > 0)) {
                    c.ok = false; c.detail = "membership vs enumeration"; return c;
                }
            }
        }
        // Commutativity and associativity; exhaustive when the lattice is
        // small, deterministic stride sample otherwise.
        size_t n = subs.size();
        size_t stride = n <= 24 ? 1 : std::max<size_t>(1, (n * n * n) / 8000);
        size_t counter = 0;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                if (!(product(subs[i], subs[j]) == product(subs[j], subs[i]))) {
                    c.ok = false; c.detail = "commutativity"; return c;
                }
                for (size_t l = 0; l < n; ++l) {
                    if (counter++ % stride != 0) continue;
                    auto left = product(product(subs[i], subs[j]), subs[l]);
                    auto right = product(subs[i], product(subs[j], subs[l]));
                    if (!(left == right)) { c.ok = false; c.detail = "associativity"; return c; }
                }
            }
    }
    return c;
}

}  // namespace

SelftestResult run_selftest() {
    SelftestResult res;
    res.checks.push_back(mcd_sweep(2000));
    res.checks.push_back(congruence_sweep(50));
    res.checks.push_back(bezout_sweep(400));
    res.checks.push_back(subgroup_laws(36));
    res.ok = std::all_of(res.checks.begin(), res.checks.end(),
                         [](const SelftestCheck& c) { return c.ok; });
    return res;
}

}  // namespace steinitz
