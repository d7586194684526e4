#pragma once

#include <optional>
#include <string>
#include <vector>

#include "steinitz/engine.hpp"

namespace steinitz {

// Verdict of the 2-adic ramification test for k(sqrt(alpha))/k.  A quadratic
// extension is tame exactly when it is unramified above 2: every prime above
// 2 needs an even valuation of alpha and a solution of x^2 = alpha modulo
// p^(2 e_p + v_p(alpha)).
struct TameWitness {
    bool tame = false;
    std::optional<FieldElem> sqrt_witness;   // x with x^2 = alpha in the quotient
    std::optional<PrimeIdeal> failing_prime;
};

TameWitness tame_test(const QuadField& k, const FieldElem& alpha);

// Product of the odd primes at which alpha has odd valuation, exponent 1.
FracIdeal quad_discriminant(const QuadField& k, const FieldElem& alpha);

// Steinitz class of k(sqrt(alpha))/k: the class of J with
// J^2 = d(K/k) * (alpha)^(-1).
ClassElem steinitz_quad(const ClassGroup& cg, const FieldElem& alpha);

struct QuadSample {
    FieldElem alpha;
    FracIdeal disc;
    i64 disc_norm = 1;
    ClassElem steinitz;
    bool unramified = false;  // trivial relative discriminant
};

struct EnumerationReport {
    i64 field_d = 0;
    i64 bound = 0;
    std::vector<QuadSample> samples;
    Subgroup realized;
};

// Tame quadratic extensions from candidate alpha: generators of principal
// products of at most three odd primes of norm <= bound (with multiplicity),
// times unit representatives, deduplicated modulo squares.
EnumerationReport enumerate_tame_quadratic(const ClassGroup& cg, i64 bound);

struct BiquadSample {
    FieldElem alpha1, alpha2;
    ClassElem steinitz;
};

struct BiquadReport {
    i64 field_d = 0;
    i64 bound = 0;
    std::vector<BiquadSample> samples;
    Subgroup realized;
};

// Steinitz class of the biquadratic field k(sqrt(a1), sqrt(a2)) for tame a1,
// a2 with coprime relative discriminants; the result is cross-checked against
// the product of the three quadratic subextension classes.
ClassElem compose_biquadratic(const ClassGroup& cg, const FieldElem& alpha1,
                              const FieldElem& alpha2);

// Same class computation without the coprimality restriction; shared ramified
// primes are what realize classes outside the squares of the class group.
ClassElem biquadratic_pair_class(const ClassGroup& cg, const FieldElem& alpha1,
                                 const FieldElem& alpha2);

// All distinct tame biquadratic extensions assembled from pairs of the
// quadratic samples; shared ramified primes between the two generators are
// allowed (the conductor-discriminant product d1*d2*d3 stays valid).
BiquadReport enumerate_tame_biquadratic(const ClassGroup& cg,
                                        const EnumerationReport& quad);

struct VerificationOutcome {
    bool upper_contains_realized = false;  // false = contradiction of the bound
    bool lower_attained = false;
    i64 analytic_violations = 0;           // samples escaping the analytic bound
    std::string note;
};

// Compare enumerated Steinitz classes against the engine interval and the
// analytic upper bound.  Throws verification_error when a sample escapes the
// proved upper bound.
VerificationOutcome verify_against_engine(const Engine& engine,
                                          const AbelianGroupSpec& g,
                                          const Subgroup& realized,
                                          const std::vector<ClassElem>& sample_classes,
                                          const RealizableInterval& interval);

}  // namespace steinitz
