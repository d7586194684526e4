#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "steinitz/abgroup.hpp"
#include "steinitz/arith.hpp"
#include "steinitz/common.hpp"

namespace steinitz {

// Reduced rational on 64-bit components (denominator > 0).
struct Rat {
    i64 num = 0;
    i64 den = 1;

    Rat() = default;
    Rat(i64 n) : num(n), den(1) {}
    Rat(i64 n, i64 d);

    bool is_integer() const { return den == 1; }
    bool operator==(const Rat&) const = default;
};

Rat operator+(const Rat& a, const Rat& b);
Rat operator-(const Rat& a, const Rat& b);
Rat operator*(const Rat& a, const Rat& b);
Rat operator/(const Rat& a, const Rat& b);
Rat operator-(const Rat& a);
std::string to_string(const Rat& r);

// Is r the square of a rational?  Fills root with the non-negative square root.
bool rat_is_square(const Rat& r, Rat* root = nullptr);

// Imaginary quadratic field Q(sqrt(d)), d < 0 squarefree.  Integral basis is
// (1, w) with w = (1+sqrt(d))/2 when d = 1 mod 4 and w = sqrt(d) otherwise.
struct QuadField {
    i64 d = -1;
    i64 disc = -4;

    bool omega_half() const { return ((d % 4) + 4) % 4 == 1; }
    bool operator==(const QuadField&) const = default;
};

// Validates d < 0 squarefree; d >= 0 is unsupported, non-squarefree is a
// domain error.
QuadField make_field(i64 d);

// Element a + b*w in the integral basis.
struct FieldElem {
    Rat a, b;

    FieldElem() = default;
    FieldElem(Rat a_, Rat b_) : a(a_), b(b_) {}
    bool is_zero() const { return num_zero(); }
    bool is_integral() const { return a.is_integer() && b.is_integer(); }
    bool operator==(const FieldElem&) const = default;

  private:
    bool num_zero() const { return a.num == 0 && b.num == 0; }
};

FieldElem fe(i64 a, i64 b = 0);

FieldElem add(const QuadField& k, const FieldElem& x, const FieldElem& y);
FieldElem sub(const QuadField& k, const FieldElem& x, const FieldElem& y);
FieldElem mul(const QuadField& k, const FieldElem& x, const FieldElem& y);
FieldElem conj(const QuadField& k, const FieldElem& x);
FieldElem neg(const FieldElem& x);
Rat norm(const QuadField& k, const FieldElem& x);
std::string to_string(const QuadField& k, const FieldElem& x);

// Coordinates (u, v) with x = u + v*sqrt(d).
std::pair<Rat, Rat> sqrt_basis(const QuadField& k, const FieldElem& x);

// Exact squareness test in k; fills root when a square.
bool is_square(const QuadField& k, const FieldElem& x, FieldElem* root = nullptr);

// Representatives of units modulo squares of units ({1,-1} generically,
// {1,i} for d=-1, {1,zeta6} for d=-3).
std::vector<FieldElem> unit_square_reps(const QuadField& k);

// Prime ideal in two-generator form (p, w - r); r is meaningful for
// residue degree 1 (split or ramified), unused for inert primes.
struct PrimeIdeal {
    i64 p = 0;
    int residue_degree = 1;
    bool ramified = false;
    i64 r = 0;

    i64 norm() const { return residue_degree == 2 ? p * p : p; }
    auto operator<=>(const PrimeIdeal&) const = default;
};

std::string to_string(const PrimeIdeal& pr);

// Splitting of a rational prime: split -> two degree-1 primes, inert -> one
// degree-2 prime, ramified -> one degree-1 prime with square p.
std::vector<PrimeIdeal> split_prime(const QuadField& k, i64 p);

// Fractional ideal in fully factored form; empty map is the unit ideal.
struct FracIdeal {
    std::map<PrimeIdeal, i64> v;

    bool is_unit() const { return v.empty(); }
    bool operator==(const FracIdeal&) const = default;
};

FracIdeal mul(const FracIdeal& a, const FracIdeal& b);
FracIdeal inverse(const FracIdeal& a);
// Unique J with J^2 = I; not_a_square_error on any odd exponent.
FracIdeal ideal_sqrt(const FracIdeal& I);
Rat ideal_norm(const FracIdeal& I);
std::string to_string(const FracIdeal& I);

// Exact valuation of a nonzero element at a prime ideal.
i64 valuation(const QuadField& k, const PrimeIdeal& pr, const FieldElem& x);

// Principal fractional ideal (alpha) in factored form; domain_error on 0.
FracIdeal element_ideal(const QuadField& k, const FieldElem& alpha);

// Primitive positive-definite binary quadratic form of discriminant disc.
struct Form {
    i64 a = 1, b = 0, c = 0;
    auto operator<=>(const Form&) const = default;
};

Form reduce_form(const QuadField& k, Form f);
Form principal_form(const QuadField& k);
Form compose_forms(const QuadField& k, const Form& f, const Form& g);
Form inverse_form(const QuadField& k, const Form& f);
std::vector<Form> reduced_forms(const QuadField& k);

// Class group of k via reduced forms, with a form <-> exponent-vector
// dictionary in the invariant-factor presentation.
class ClassGroup {
  public:
    explicit ClassGroup(const QuadField& k);

    const QuadField& field() const { return k_; }
    const FinAbGroup& group() const { return group_; }
    const std::vector<Form>& forms() const { return forms_; }
    const std::vector<Form>& basis_forms() const { return basis_forms_; }
    i64 h() const { return i64(forms_.size()); }

    ClassElem class_of_form(const Form& f) const;
    ClassElem class_of_prime(const PrimeIdeal& pr) const;
    ClassElem class_of_ideal(const FracIdeal& I) const;

    bool is_principal(const FracIdeal& I) const;

  private:
    QuadField k_;
    std::vector<Form> forms_;
    FinAbGroup group_;
    std::vector<Form> basis_forms_;
    std::map<Form, ClassElem> dictionary_;
};

// Degree-1 unramified primes of norm <= bound, increasing norm, both primes
// above each split rational prime (ordered by r within a norm).
std::vector<PrimeIdeal> degree_one_primes(const QuadField& k, i64 bound);

// Search for a generator: an element of norm N(I) generating I.  Integral
// ideals only.  Returns nullopt when I is not principal.
std::optional<FieldElem> principal_generator(const QuadField& k, const FracIdeal& I);

// The form attached to an integral ideal class representative.
Form form_of_prime(const QuadField& k, const PrimeIdeal& pr);

}  // namespace steinitz
