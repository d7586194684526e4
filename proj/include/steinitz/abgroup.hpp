#pragma once

#include <vector>

#include "steinitz/common.hpp"

namespace steinitz {

// Finite abelian group in invariant-factor form: factors n_1, n_2, ... with
// n_{i+1} | n_i.  The trivial group is [1].
struct FinAbGroup {
    std::vector<i64> factors;

    FinAbGroup() : factors{1} {}
    explicit FinAbGroup(std::vector<i64> fs);

    int rank() const { return int(factors.size()); }
    i64 order() const;
    bool operator==(const FinAbGroup&) const = default;
};

// Element as an exponent vector, component i reduced mod factors[i].
struct ClassElem {
    std::vector<i64> e;
    bool operator==(const ClassElem&) const = default;
};

ClassElem zero_elem(const FinAbGroup& g);
ClassElem make_elem(const FinAbGroup& g, std::vector<i64> raw);
ClassElem add(const FinAbGroup& g, const ClassElem& a, const ClassElem& b);
ClassElem neg(const FinAbGroup& g, const ClassElem& a);
ClassElem scale(const FinAbGroup& g, const ClassElem& a, i64 k);
bool is_zero(const ClassElem& a);
i64 elem_order(const FinAbGroup& g, const ClassElem& a);

// Subgroup of a FinAbGroup, canonicalized as the row Hermite normal form of
// the lattice generated by lifted generators together with the relation
// lattice diag(factors).  Equality of subgroups is equality of the matrices.
class Subgroup {
  public:
    Subgroup() = default;
    // Smallest subgroup containing elems (empty list -> trivial subgroup).
    Subgroup(const FinAbGroup& ambient, const std::vector<ClassElem>& elems);

    static Subgroup trivial(const FinAbGroup& ambient);
    static Subgroup whole(const FinAbGroup& ambient);

    const FinAbGroup& ambient() const { return ambient_; }
    // Upper-triangular lattice basis; row i has pivot hnf[i][i] > 0.
    const std::vector<std::vector<i64>>& basis() const { return hnf_; }

    i64 order() const;
    bool contains(const ClassElem& x) const;
    bool contains(const Subgroup& other) const;
    // Generators of the subgroup as group elements (the basis rows).
    std::vector<ClassElem> generators() const;
    // All elements; throws capacity_error above the cap.
    std::vector<ClassElem> enumerate(i64 cap = 10000) const;

    bool operator==(const Subgroup& other) const {
        return ambient_ == other.ambient_ && hnf_ == other.hnf_;
    }

    friend Subgroup product(const Subgroup& a, const Subgroup& b);
    friend Subgroup power(const Subgroup& a, i64 n);

  private:
    FinAbGroup ambient_;
    std::vector<std::vector<i64>> hnf_;
};

// Subgroup generated by A and B together (same ambient).
Subgroup product(const Subgroup& a, const Subgroup& b);
// {a^n : a in A}; n = 0 gives the trivial subgroup.  Requires n >= 0.
Subgroup power(const Subgroup& a, i64 n);

Subgroup generated(const FinAbGroup& ambient, const std::vector<ClassElem>& elems);

}  // namespace steinitz
