#include "steinitz/extlab.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace steinitz {

namespace {

// Clearing denominators by a rational square keeps the extension (and hence
// tameness) unchanged and makes the element integral.
FieldElem clear_denominators(const QuadField& k, const FieldElem& alpha) {
    i64 den = std::lcm(alpha.a.den, alpha.b.den);
    return mul(k, alpha, FieldElem(Rat(den) * Rat(den), Rat(0)));
}

}  // namespace

TameWitness tame_test(const QuadField& k, const FieldElem& alpha) {
    if (alpha.is_zero()) throw domain_error("tame_test: alpha must be nonzero");
    if (is_square(k, alpha))
        throw degenerate_error("tame_test: alpha is a square, the extension is trivial");

    FieldElem beta = clear_denominators(k, alpha);
    auto primes2 = split_prime(k, 2);

    TameWitness out;
    std::vector<i64> t_vals, m_vals;
    i64 c = 2;
    for (const auto& pr : primes2) {
        i64 e = pr.ramified ? 2 : 1;
        i64 t = valuation(k, pr, beta);
        if (t % 2 != 0) {
            out.tame = false;
            out.failing_prime = pr;
            return out;
        }
        i64 m = 2 * e + t;
        t_vals.push_back(t);
        m_vals.push_back(m);
        c = std::max(c, (m + e - 1) / e);
    }
    if (c > 16) throw capacity_error("tame_test: 2-adic valuation too large");

    // Exhaustive search for x with x^2 = beta modulo prod p^(2e_p + t_p);
    // representatives modulo 2^c cover the quotient.
    const i64 lim = i64(1) << c;
    std::vector<bool> solvable(primes2.size(), false);
    for (i64 x0 = 0; x0 < lim && !out.sqrt_witness; ++x0) {
        for (i64 x1 = 0; x1 < lim && !out.sqrt_witness; ++x1) {
            FieldElem x = fe(x0, x1);
            FieldElem diff = sub(k, mul(k, x, x), beta);
            if (diff.is_zero()) continue;
            bool all = true;
            for (size_t i = 0; i < primes2.size(); ++i) {
                if (valuation(k, primes2[i], diff) >= m_vals[i])
                    solvable[i] = true;
                else
                    all = false;
            }
            if (all) out.sqrt_witness = x;
        }
    }
    if (out.sqrt_witness) {
        out.tame = true;
        return out;
    }
    out.tame = false;
    for (size_t i = 0; i < primes2.size(); ++i)
        if (!solvable[i]) {
            out.failing_prime = primes2[i];
            break;
        }
    if (!out.failing_prime) out.failing_prime = primes2.front();
    return out;
}

FracIdeal quad_discriminant(const QuadField& k, const FieldElem& alpha) {
    auto witness = tame_test(k, alpha);
    if (!witness.tame)
        throw domain_error("quad_discriminant: extension is wildly ramified at " +
                           to_string(*witness.failing_prime));
    FracIdeal out;
    for (const auto& [pr, e] : element_ideal(k, alpha).v) {
        if (pr.p == 2) continue;
        if (e % 2 != 0) out.v[pr] = 1;
    }
    return out;
}

ClassElem steinitz_quad(const ClassGroup& cg, const FieldElem& alpha) {
    const QuadField& k = cg.field();
    FracIdeal d = quad_discriminant(k, alpha);
    FracIdeal quotient = mul(d, inverse(element_ideal(k, alpha)));
    try {
        return cg.class_of_ideal(ideal_sqrt(quotient));
    } catch (const not_a_square_error&) {
        throw consistency_error("steinitz_quad: d(K/k)/(alpha) is not an ideal square");
    }
}

namespace {

std::vector<PrimeIdeal> odd_prime_pool(const QuadField& k, i64 bound) {
    std::vector<PrimeIdeal> pool;
    for (i64 p : small_primes()) {
        if (p > bound) break;
        if (p == 2) continue;
        for (const auto& pr : split_prime(k, p))
            if (pr.norm() <= bound) pool.push_back(pr);
    }
    return pool;
}

// Key identifying the primes at which (alpha) has odd valuation; a necessary
// condition for two candidates to generate the same extension.
std::vector<PrimeIdeal> odd_support(const FracIdeal& I) {
    std::vector<PrimeIdeal> out;
    for (const auto& [pr, e] : I.v)
        if (e % 2 != 0) out.push_back(pr);
    return out;
}

}  // namespace

EnumerationReport enumerate_tame_quadratic(const ClassGroup& cg, i64 bound) {
    if (bound < 2) throw domain_error("enumerate_tame_quadratic: bound must be >= 2");
    const QuadField& k = cg.field();

    auto pool = odd_prime_pool(k, bound);
    // Multisets of size 0..3 over the pool (empty product = unit candidates).
    std::vector<std::vector<size_t>> multisets{{}};
    for (size_t i = 0; i < pool.size(); ++i) {
        multisets.push_back({i});
        for (size_t j = i; j < pool.size(); ++j) {
            multisets.push_back({i, j});
            for (size_t l = j; l < pool.size(); ++l) multisets.push_back({i, j, l});
        }
    }

    EnumerationReport rep;
    rep.field_d = k.d;
    rep.bound = bound;

    std::map<std::vector<PrimeIdeal>, std::vector<FieldElem>> seen_fields;
    std::vector<ClassElem> classes;

    for (const auto& ms : multisets) {
        FracIdeal I;
        for (size_t idx : ms) I.v[pool[idx]] += 1;
        auto gen = principal_generator(k, I);
        if (!gen) {
            if (cg.is_principal(I))
                throw consistency_error(
                    "enumerate_tame_quadratic: class is principal but no generator found");
            continue;
        }
        if (!cg.is_principal(I))
            throw consistency_error(
                "enumerate_tame_quadratic: generator found for a nonprincipal class");
        for (const FieldElem& u : unit_square_reps(k)) {
            FieldElem alpha = mul(k, u, *gen);
            FracIdeal ideal = element_ideal(k, alpha);
            auto key = odd_support(ideal);
            bool duplicate = false;
            for (const FieldElem& other : seen_fields[key])
                if (is_square(k, mul(k, alpha, other))) {
                    duplicate = true;
                    break;
                }
            if (duplicate) continue;
            seen_fields[key].push_back(alpha);
            try {
                auto witness = tame_test(k, alpha);
                if (!witness.tame) continue;
            } catch (const degenerate_error&) {
                continue;  // square candidate (unit 1 on a square ideal)
            }
            QuadSample s;
            s.alpha = alpha;
            s.disc = quad_discriminant(k, alpha);
            s.disc_norm = ideal_norm(s.disc).num;
            s.steinitz = steinitz_quad(cg, alpha);
            s.unramified = s.disc.is_unit();
            classes.push_back(s.steinitz);
            rep.samples.push_back(std::move(s));
        }
    }
    rep.realized = generated(cg.group(), classes);
    return rep;
}

namespace {

// Steinitz class of k(sqrt(a1), sqrt(a2)) through the conductor-discriminant
// product d1 * d2 * d3, cross-checked against the three quadratic classes.
ClassElem biquadratic_class(const ClassGroup& cg, const FracIdeal& I1,
                            const FracIdeal& I2, const ClassElem& st1,
                            const ClassElem& st2) {
    auto odd_disc = [](const FracIdeal& I) {
        FracIdeal d;
        for (const auto& [pr, e] : I.v)
            if (pr.p != 2 && e % 2 != 0) d.v[pr] = 1;
        return d;
    };
    FracIdeal I12 = mul(I1, I2);
    FracIdeal d1 = odd_disc(I1), d2 = odd_disc(I2), d3 = odd_disc(I12);
    ClassElem st = cg.class_of_ideal(ideal_sqrt(mul(mul(d1, d2), d3)));
    ClassElem st3 = cg.class_of_ideal(ideal_sqrt(mul(d3, inverse(I12))));
    ClassElem prod = add(cg.group(), add(cg.group(), st1, st2), st3);
    if (!(st == prod))
        throw consistency_error(
            "biquadratic: discriminant route and subextension product disagree");
    return st;
}

}  // namespace

ClassElem compose_biquadratic(const ClassGroup& cg, const FieldElem& alpha1,
                              const FieldElem& alpha2) {
    const QuadField& k = cg.field();
    for (const FieldElem* a : {&alpha1, &alpha2}) {
        auto w = tame_test(k, *a);
        if (!w.tame)
            throw domain_error("compose_biquadratic: generator is wild at " +
                               to_string(*w.failing_prime));
    }
    FieldElem prod12 = mul(k, alpha1, alpha2);
    if (is_square(k, prod12))
        throw degenerate_error("compose_biquadratic: alpha1*alpha2 is a square");
    FracIdeal d1 = quad_discriminant(k, alpha1);
    FracIdeal d2 = quad_discriminant(k, alpha2);
    for (const auto& [pr, e] : d1.v)
        if (d2.v.count(pr))
            throw domain_error("compose_biquadratic: discriminants share " + to_string(pr));
    ClassElem st1 = steinitz_quad(cg, alpha1);
    ClassElem st2 = steinitz_quad(cg, alpha2);
    ClassElem st3 = steinitz_quad(cg, prod12);
    // Coprime discriminants: the third subextension multiplies the classes.
    if (!(st3 == add(cg.group(), st1, st2)))
        throw consistency_error("compose_biquadratic: multiplication identity failed");
    return biquadratic_class(cg, element_ideal(k, alpha1), element_ideal(k, alpha2),
                             st1, st2);
}

ClassElem biquadratic_pair_class(const ClassGroup& cg, const FieldElem& alpha1,
                                 const FieldElem& alpha2) {
    const QuadField& k = cg.field();
    for (const FieldElem* a : {&alpha1, &alpha2}) {
        auto w = tame_test(k, *a);
        if (!w.tame)
            throw domain_error("biquadratic_pair_class: generator is wild at " +
                               to_string(*w.failing_prime));
    }
    if (is_square(k, mul(k, alpha1, alpha2)))
        throw degenerate_error("biquadratic_pair_class: alpha1*alpha2 is a square");
    return biquadratic_class(cg, element_ideal(k, alpha1), element_ideal(k, alpha2),
                             steinitz_quad(cg, alpha1), steinitz_quad(cg, alpha2));
}

BiquadReport enumerate_tame_biquadratic(const ClassGroup& cg,
                                        const EnumerationReport& quad) {
    const QuadField& k = cg.field();
    BiquadReport rep;
    rep.field_d = quad.field_d;
    rep.bound = quad.bound;

    std::vector<FracIdeal> ideals;
    ideals.reserve(quad.samples.size());
    for (const auto& s : quad.samples) ideals.push_back(element_ideal(k, s.alpha));

    std::vector<ClassElem> classes;
    std::set<std::vector<i64>> witnessed;
    for (size_t i = 0; i < quad.samples.size(); ++i) {
        for (size_t j = i + 1; j < quad.samples.size(); ++j) {
            FieldElem prod = mul(k, quad.samples[i].alpha, quad.samples[j].alpha);
            if (is_square(k, prod)) continue;  // same quadratic field twice
            ClassElem st = biquadratic_class(cg, ideals[i], ideals[j],
                                             quad.samples[i].steinitz,
                                             quad.samples[j].steinitz);
            classes.push_back(st);
            if (witnessed.insert(st.e).second)
                rep.samples.push_back(BiquadSample{quad.samples[i].alpha,
                                                   quad.samples[j].alpha, st});
        }
    }
    rep.realized = generated(cg.group(), classes);
    return rep;
}

VerificationOutcome verify_against_engine(const Engine& engine,
                                          const AbelianGroupSpec& g,
                                          const Subgroup& realized,
                                          const std::vector<ClassElem>& sample_classes,
                                          const RealizableInterval& interval) {
    if (!(g.factors == std::vector<i64>{2} || g.factors == std::vector<i64>{2, 2}))
        throw unsupported_error(
            "verify_against_engine: only C(2) and C(2)xC(2) are enumerable");
    VerificationOutcome out;
    out.upper_contains_realized = interval.upper.contains(realized);
    out.lower_attained = realized.contains(interval.lower);
    Subgroup analytic = engine.upper_bound_analytic(g);
    for (const auto& cls : sample_classes)
        if (!analytic.contains(cls)) ++out.analytic_violations;
    if (!out.upper_contains_realized)
        throw verification_error(
            "verify_against_engine: realized classes escape the proved upper bound");
    if (out.analytic_violations > 0)
        throw verification_error(
            "verify_against_engine: " + std::to_string(out.analytic_violations) +
            " sample(s) escape the analytic upper bound");
    out.note = out.lower_attained ? "lower bound attained by enumeration"
                                  : "lower bound not attained by these witnesses";
    return out;
}

}  // namespace steinitz
