#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "steinitz/wgroups.hpp"

namespace steinitz {

// Abelian Galois group C(n_1) x ... x C(n_r), n_{i+1} | n_i, with its l-part
// table and eta (2 iff the order is even with cyclic 2-Sylow subgroup).
struct AbelianGroupSpec {
    std::vector<i64> factors;
    i64 order = 1;
    int eta = 1;

    static AbelianGroupSpec from_orders(const std::vector<i64>& orders);

    i64 n1(i64 l) const { return l_part(factors[0], l); }
    i64 n2(i64 l) const { return factors.size() > 1 ? l_part(factors[1], l) : 1; }
    i64 n_of(i64 l) const { return l_part(order, l); }
    std::vector<i64> prime_divisors() const;
    bool operator==(const AbelianGroupSpec&) const = default;
};

struct SpecialGroupSpec {
    enum class Kind { A4, Dihedral2n, TwoVecSemidirect };
    Kind kind = Kind::A4;
    i64 n = 0;                 // Dihedral2n: odd n >= 3; TwoVecSemidirect: C(2)^n
    AbelianGroupSpec odd_part; // TwoVecSemidirect: the odd group acted upon
};

struct TrailEntry {
    std::string rule;
    std::string detail;
};

// Pair lower <= upper of subgroups bracketing the realizable classes, exact
// when they coincide.
struct RealizableInterval {
    Subgroup lower;
    Subgroup upper;
    bool exact = false;
    std::vector<TrailEntry> trail;

    // Present when the alternate even-order auxiliary factor (modulus n_1(2)
    // instead of n_2(2)) was requested and differs from the default.
    std::optional<std::string> variant_note;
};

// Plug-in bounds for the unknown cyclic 2-power term.
struct TwoCyclicOracle {
    std::optional<Subgroup> extra_lower;  // empirically realized classes
    std::optional<Subgroup> upper;        // caller-supplied upper bound
};

RealizableInterval make_exact(const Subgroup& s, std::vector<TrailEntry> trail = {});

// st(K/k) = st(E/k)^[K:E] * N_{E/k}(st(K/E)), with both classes already in
// Cl(k).
ClassElem steinitz_tower(const FinAbGroup& g, const ClassElem& st_E_over_k,
                         i64 deg_K_over_E, const ClassElem& norm_of_st_K_over_E);

// Formula engine for one field; memoizes sampled W-groups.
class Engine {
  public:
    Engine(const ClassGroup& cg, SamplePolicy policy,
           std::optional<std::string> cache_dir = std::nullopt);

    const ClassGroup& class_group() const { return cg_; }
    const SamplePolicy& policy() const { return policy_; }

    // Sampled subgroup for the residue condition; memoized.
    const WGroupResult& w(i64 modulus, bool plus_minus = false) const;
    bool all_sampled_stabilized() const;

    // Dispatcher over the parity of |G| (odd formula, or the even-order split).
    RealizableInterval realizable(const AbelianGroupSpec& g,
                                  const TwoCyclicOracle& oracle = {},
                                  bool alt_even_factor = false) const;

    RealizableInterval realizable_odd(const AbelianGroupSpec& g) const;
    // Bounds for the cyclic group of order 2^s.
    RealizableInterval two_cyclic_bounds(i64 s, const TwoCyclicOracle& oracle = {}) const;
    RealizableInterval realizable_even(const AbelianGroupSpec& g,
                                       const TwoCyclicOracle& oracle = {},
                                       bool alt_even_factor = false) const;
    RealizableInterval realizable_special(const SpecialGroupSpec& spec,
                                          const TwoCyclicOracle& oracle = {}) const;

    // Product over l-Sylow subgroups; raises consistency_error when it
    // disagrees with the dispatcher.
    RealizableInterval sylow_recompose(const AbelianGroupSpec& g,
                                       const TwoCyclicOracle& oracle = {}) const;

    // Subgroup certified to contain every tame Steinitz class for g.
    Subgroup upper_bound_analytic(const AbelianGroupSpec& g) const;

  private:
    Subgroup whole() const { return Subgroup::whole(cg_.group()); }
    Subgroup trivial() const { return Subgroup::trivial(cg_.group()); }

    ClassGroup cg_;
    SamplePolicy policy_;
    std::unique_ptr<WitnessCache> cache_;
    mutable std::map<std::pair<i64, bool>, WGroupResult> memo_;
};

}  // namespace steinitz
