#include "steinitz/wgroups.hpp"

#include <filesystem>
#include <fstream>

#include <json.hpp>

namespace steinitz {

namespace {
bool covers_all_units(const NormCondition& cond) {
    if (cond.modulus <= 2) return true;
    if (!cond.plus_minus) return false;
    // phi(m) = 2 exactly for m in {3, 4, 6}.
    return cond.modulus == 3 || cond.modulus == 4 || cond.modulus == 6;
}
}  // namespace

std::string WitnessCache::path_for(const QuadField& k, const NormCondition& cond) const {
    return dir_ + "/w_" + std::to_string(-k.d) + "_m" + std::to_string(cond.modulus) +
           (cond.plus_minus ? "_pm" : "_p1") + ".jsonl";
}

std::optional<WitnessCache::Entry> WitnessCache::load(const QuadField& k,
                                                      const NormCondition& cond,
                                                      const SamplePolicy& pol) const {
    std::ifstream in(path_for(k, cond));
    if (!in) return std::nullopt;
    std::string line;
    if (!std::getline(in, line)) return std::nullopt;
    try {
        auto header = nlohmann::json::parse(line);
        if (header.value("window", -1) != pol.window ||
            header.value("max_norm", i64(-1)) != pol.max_norm ||
            header.value("d", i64(0)) != k.d || !header.contains("stabilized"))
            return std::nullopt;
        Entry entry;
        entry.stabilized = header.at("stabilized").get<bool>();
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            auto j = nlohmann::json::parse(line);
            entry.witnesses.emplace_back(j.at("p").get<i64>(), j.at("r").get<i64>());
        }
        return entry;
    } catch (const nlohmann::json::exception&) {
        return std::nullopt;  // corrupt cache: resample
    }
}

void WitnessCache::store(const QuadField& k, const NormCondition& cond,
                         const SamplePolicy& pol,
                         const std::vector<WitnessPrime>& witnesses,
                         bool stabilized) const {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    std::ofstream out(path_for(k, cond), std::ios::trunc);
    if (!out) return;  // cache is best-effort
    nlohmann::json header{{"d", k.d},
                          {"modulus", cond.modulus},
                          {"pm", cond.plus_minus},
                          {"window", pol.window},
                          {"max_norm", pol.max_norm},
                          {"stabilized", stabilized}};
    out << header.dump() << "\n";
    for (const auto& w : witnesses) {
        nlohmann::json line{{"p", w.prime.p},
                            {"r", w.prime.r},
                            {"residue", w.residue},
                            {"class_vector", w.cls.e}};
        out << line.dump() << "\n";
    }
}

WGroupResult w_group(const ClassGroup& cg, const NormCondition& cond,
                     const SamplePolicy& pol, const WitnessCache* cache) {
    if (cond.modulus < 1) throw domain_error("w_group: modulus must be >= 1");
    WGroupResult res;
    res.window = pol.window;
    if (covers_all_units(cond)) {
        res.subgroup = Subgroup::whole(cg.group());
        res.stabilized = true;
        res.short_circuited = true;
        res.max_norm_reached = 0;
        return res;
    }

    const auto allowed = cond.allowed();
    auto is_allowed = [&](i64 r) {
        for (i64 t : allowed)
            if (r == t) return true;
        return false;
    };

    // Replay the cached qualifying primes when available; the stream is
    // deterministic, so the replay reproduces the original run exactly.
    std::optional<WitnessCache::Entry> cached;
    if (cache) cached = cache->load(cg.field(), cond, pol);

    res.subgroup = Subgroup::trivial(cg.group());
    int streak = 0;
    auto consume = [&](const PrimeIdeal& pr) {
        i64 residue = pr.norm() % cond.modulus;
        ClassElem cls = cg.class_of_prime(pr);
        res.primes_used.push_back(WitnessPrime{pr, residue, cls});
        Subgroup next = product(res.subgroup, generated(cg.group(), {cls}));
        if (next == res.subgroup) {
            ++streak;
        } else {
            res.subgroup = next;
            streak = 0;
        }
        res.max_norm_reached = pr.norm();
        return streak >= pol.window;
    };

    bool replay_ok = false;
    if (cached) {
        replay_ok = true;
        for (const auto& [p, r] : cached->witnesses) {
            auto prs = split_prime(cg.field(), p);
            const PrimeIdeal* match = nullptr;
            for (const auto& pr : prs)
                if (pr.residue_degree == 1 && !pr.ramified && pr.r == r) match = &pr;
            if (!match || match->norm() % cond.modulus == 0 ||
                !is_allowed(match->norm() % cond.modulus)) {
                replay_ok = false;  // stale or corrupt: fall back to sampling
                break;
            }
            if (consume(*match)) {
                res.stabilized = true;
                break;
            }
        }
        if (replay_ok && res.stabilized != cached->stabilized)
            replay_ok = false;  // truncated or inconsistent: resample
    }

    if (!replay_ok) {
        res.subgroup = Subgroup::trivial(cg.group());
        res.primes_used.clear();
        res.max_norm_reached = 0;
        res.stabilized = false;
        streak = 0;
        for (const auto& pr : degree_one_primes(cg.field(), pol.max_norm)) {
            if (pr.norm() % cond.modulus == 0) continue;  // keep coprime to m
            if (!is_allowed(pr.norm() % cond.modulus)) continue;
            if (consume(pr)) {
                res.stabilized = true;
                break;
            }
        }
        if (cache) cache->store(cg.field(), cond, pol, res.primes_used, res.stabilized);
    }
    return res;
}

bool check_wexp(const ClassGroup& cg, i64 m, i64 n, const SamplePolicy& pol,
                const WitnessCache* cache) {
    if (m < 1 || n < 1) throw domain_error("check_wexp: m and n must be positive");
    for (const auto& [q, e] : factorize(n).factors) {
        (void)e;
        if (m % q != 0)
            throw domain_error("check_wexp: every prime of n must divide m");
    }
    auto wm = w_group(cg, NormCondition{m, false}, pol, cache);
    auto wmn = w_group(cg, NormCondition{checked_i64(i128(m) * n, "check_wexp"), false},
                       pol, cache);
    return wmn.subgroup.contains(power(wm.subgroup, n));
}

}  // namespace steinitz
