#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "steinitz/quadfield.hpp"

namespace steinitz {

// Residue condition on prime norms: N(p) mod m in {1} or {1, m-1}.
struct NormCondition {
    i64 modulus = 1;
    bool plus_minus = false;

    std::vector<i64> allowed() const {
        if (!plus_minus || modulus <= 2) return {1 % modulus};
        return {1, modulus - 1};
    }
    auto operator<=>(const NormCondition&) const = default;
};

struct SamplePolicy {
    int window = 50;
    i64 max_norm = 100000;
    bool operator==(const SamplePolicy&) const = default;
};

struct WitnessPrime {
    PrimeIdeal prime;
    i64 residue = 0;
    ClassElem cls;
};

// Subgroup of Cl(k) generated by classes of sampled degree-1 primes whose
// norms satisfy the residue condition.  stabilized means `window` consecutive
// qualifying primes added no new class before max_norm was reached.
struct WGroupResult {
    Subgroup subgroup;
    std::vector<WitnessPrime> primes_used;
    bool stabilized = false;
    int window = 0;
    i64 max_norm_reached = 0;
    bool short_circuited = false;
};

// Optional on-disk witness cache (JSON lines, one file per (d, modulus,
// residue-set)); invalidated when the stored policy differs.
class WitnessCache {
  public:
    explicit WitnessCache(std::string dir) : dir_(std::move(dir)) {}

    struct Entry {
        std::vector<std::pair<i64, i64>> witnesses;  // (p, r) in stream order
        bool stabilized = false;
    };
    std::optional<Entry> load(const QuadField& k, const NormCondition& cond,
                              const SamplePolicy& pol) const;
    void store(const QuadField& k, const NormCondition& cond, const SamplePolicy& pol,
               const std::vector<WitnessPrime>& witnesses, bool stabilized) const;

  private:
    std::string path_for(const QuadField& k, const NormCondition& cond) const;
    std::string dir_;
};

// Sample W(k, m) (or its {+-1} variant).  When the allowed residues cover all
// units mod m the splitting condition is vacuous and the whole class group is
// returned without sampling.
WGroupResult w_group(const ClassGroup& cg, const NormCondition& cond,
                     const SamplePolicy& pol, const WitnessCache* cache = nullptr);

// Property probe: compare W(k,m)^n against W(k,mn).  Requires every prime of n
// to divide m.  Returns whether the sampled inclusion holds.
bool check_wexp(const ClassGroup& cg, i64 m, i64 n, const SamplePolicy& pol,
                const WitnessCache* cache = nullptr);

}  // namespace steinitz
