#include "steinitz/abgroup.hpp"

#include <algorithm>
#include <numeric>

#include "steinitz/arith.hpp"

namespace steinitz {

FinAbGroup::FinAbGroup(std::vector<i64> fs) : factors(std::move(fs)) {
    if (factors.empty()) factors = {1};
    for (size_t i = 0; i < factors.size(); ++i) {
        if (factors[i] <= 0) throw domain_error("FinAbGroup: factors must be positive");
        if (i + 1 < factors.size() && factors[i] % factors[i + 1] != 0)
            throw domain_error("FinAbGroup: factors must form a divisibility chain");
    }
    while (factors.size() > 1 && factors.back() == 1) factors.pop_back();
}

i64 FinAbGroup::order() const {
    i128 n = 1;
    for (i64 f : factors) n *= f;
    return checked_i64(n, "FinAbGroup::order");
}

ClassElem zero_elem(const FinAbGroup& g) {
    return ClassElem{std::vector<i64>(g.factors.size(), 0)};
}

ClassElem make_elem(const FinAbGroup& g, std::vector<i64> raw) {
    if (raw.size() != g.factors.size())
        throw domain_error("make_elem: dimension mismatch");
    for (size_t i = 0; i < raw.size(); ++i) {
        raw[i] %= g.factors[i];
        if (raw[i] < 0) raw[i] += g.factors[i];
    }
    return ClassElem{std::move(raw)};
}

ClassElem add(const FinAbGroup& g, const ClassElem& a, const ClassElem& b) {
    if (a.e.size() != b.e.size() || a.e.size() != g.factors.size())
        throw domain_error("add: dimension mismatch");
    std::vector<i64> out(a.e.size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = (a.e[i] + b.e[i]) % g.factors[i];
    return ClassElem{std::move(out)};
}

ClassElem neg(const FinAbGroup& g, const ClassElem& a) {
    std::vector<i64> out(a.e.size());
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = a.e[i] == 0 ? 0 : g.factors[i] - a.e[i];
    return ClassElem{std::move(out)};
}

ClassElem scale(const FinAbGroup& g, const ClassElem& a, i64 k) {
    std::vector<i64> out(a.e.size());
    for (size_t i = 0; i < out.size(); ++i) {
        i64 m = g.factors[i];
        i64 v = i64((i128(a.e[i]) * (k % m)) % m);
        out[i] = v < 0 ? v + m : v;
    }
    return ClassElem{std::move(out)};
}

bool is_zero(const ClassElem& a) {
    return std::all_of(a.e.begin(), a.e.end(), [](i64 v) { return v == 0; });
}

i64 elem_order(const FinAbGroup& g, const ClassElem& a) {
    i64 ord = 1;
    for (size_t i = 0; i < a.e.size(); ++i) {
        i64 o = g.factors[i] / std::gcd(g.factors[i], a.e[i] == 0 ? g.factors[i] : a.e[i]);
        ord = std::lcm(ord, o);
    }
    return ord;
}

namespace {

// Row Hermite normal form of the lattice spanned by `rows` (each of length r).
// Callers always include the relation lattice diag(factors), so the result is
// a full-rank upper-triangular r x r basis with positive pivots and the
// entries above each pivot reduced into [0, pivot).
std::vector<std::vector<i64>> hermite(std::vector<std::vector<i64>> rows, int r) {
    std::vector<std::vector<i64>> out;
    for (int col = 0; col < r; ++col) {
        // Eliminate column `col` across all remaining rows by gcd steps.
        size_t pivot = rows.size();
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            if (pivot == rows.size()) {
                pivot = i;
                continue;
            }
            // Combine rows[pivot] and rows[i] so one column entry becomes 0.
            i64 a = rows[pivot][col], b = rows[i][col], x, y;
            i64 g = ext_gcd(a, b, x, y);
            std::vector<i64> comb(r), rest(r);
            for (int j = 0; j < r; ++j) {
                comb[j] = checked_i64(i128(x) * rows[pivot][j] + i128(y) * rows[i][j],
                                      "hermite");
                rest[j] = checked_i64((i128(a) / g) * rows[i][j] -
                                          (i128(b) / g) * rows[pivot][j],
                                      "hermite");
            }
            rows[pivot] = std::move(comb);
            rows[i] = std::move(rest);
        }
        if (pivot == rows.size())
            throw consistency_error("hermite: lattice not full rank");
        std::vector<i64> prow = rows[pivot];
        rows.erase(rows.begin() + i64(pivot));
        if (prow[col] < 0)
            for (auto& v : prow) v = -v;
        // Reduce previously fixed rows above this pivot.
        for (auto& fixed : out) {
            i64 q = fixed[col] / prow[col];
            if (fixed[col] % prow[col] < 0) q -= 1;
            if (q != 0)
                for (int j = 0; j < r; ++j) fixed[j] -= q * prow[j];
        }
        out.push_back(std::move(prow));
    }
    return out;
}

std::vector<std::vector<i64>> relation_rows(const FinAbGroup& g) {
    int r = g.rank();
    std::vector<std::vector<i64>> rows;
    for (int i = 0; i < r; ++i) {
        std::vector<i64> row(r, 0);
        row[i] = g.factors[i];
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

Subgroup::Subgroup(const FinAbGroup& ambient, const std::vector<ClassElem>& elems)
    : ambient_(ambient) {
    int r = ambient.rank();
    auto rows = relation_rows(ambient);
    for (const auto& el : elems) {
        if (int(el.e.size()) != r) throw domain_error("Subgroup: dimension mismatch");
        rows.push_back(el.e);
    }
    hnf_ = hermite(std::move(rows), r);
}

Subgroup Subgroup::trivial(const FinAbGroup& ambient) { return Subgroup(ambient, {}); }

Subgroup Subgroup::whole(const FinAbGroup& ambient) {
    std::vector<ClassElem> gens;
    for (int i = 0; i < ambient.rank(); ++i) {
        auto v = zero_elem(ambient);
        v.e[size_t(i)] = 1 % ambient.factors[size_t(i)];
        gens.push_back(v);
    }
    return Subgroup(ambient, gens);
}

i64 Subgroup::order() const {
    i128 n = 1;
    for (size_t i = 0; i < hnf_.size(); ++i)
        n *= ambient_.factors[i] / hnf_[i][i];
    return checked_i64(n, "Subgroup::order");
}

bool Subgroup::contains(const ClassElem& x) const {
    if (int(x.e.size()) != ambient_.rank())
        throw domain_error("Subgroup::contains: dimension mismatch");
    std::vector<i64> v = x.e;
    for (size_t i = 0; i < hnf_.size(); ++i) {
        if (v[i] % hnf_[i][i] != 0) return false;
        i64 q = v[i] / hnf_[i][i];
        for (size_t j = i; j < v.size(); ++j) v[j] -= q * hnf_[i][j];
    }
    return std::all_of(v.begin(), v.end(), [](i64 t) { return t == 0; });
}

bool Subgroup::contains(const Subgroup& other) const {
    if (!(ambient_ == other.ambient_))
        throw domain_error("Subgroup::contains: ambient mismatch");
    for (const auto& g : other.generators())
        if (!contains(g)) return false;
    return true;
}

std::vector<ClassElem> Subgroup::generators() const {
    std::vector<ClassElem> out;
    for (const auto& row : hnf_) out.push_back(make_elem(ambient_, row));
    return out;
}

std::vector<ClassElem> Subgroup::enumerate(i64 cap) const {
    if (order() > cap)
        throw capacity_error("Subgroup::enumerate: order exceeds cap");
    // The basis rows give a bijection (t_1, ..., t_r) -> sum t_i * row_i with
    // t_i in [0, n_i / d_i).
    std::vector<i64> counts;
    for (size_t i = 0; i < hnf_.size(); ++i)
        counts.push_back(ambient_.factors[i] / hnf_[i][i]);
    std::vector<ClassElem> out;
    std::vector<i64> t(counts.size(), 0);
    while (true) {
        std::vector<i64> acc(counts.size(), 0);
        for (size_t i = 0; i < counts.size(); ++i)
            for (size_t j = 0; j < counts.size(); ++j)
                acc[j] += t[i] * hnf_[i][j];
        out.push_back(make_elem(ambient_, acc));
        size_t k = 0;
        while (k < t.size() && ++t[k] == counts[k]) t[k++] = 0;
        if (k == t.size()) break;
    }
    return out;
}

Subgroup product(const Subgroup& a, const Subgroup& b) {
    if (!(a.ambient_ == b.ambient_)) throw domain_error("product: ambient mismatch");
    std::vector<ClassElem> gens;
    for (const auto& r : a.hnf_) gens.push_back(make_elem(a.ambient_, r));
    for (const auto& r : b.hnf_) gens.push_back(make_elem(a.ambient_, r));
    return Subgroup(a.ambient_, gens);
}

Subgroup power(const Subgroup& a, i64 n) {
    if (n < 0) throw domain_error("power: exponent must be non-negative");
    std::vector<ClassElem> gens;
    for (const auto& row : a.hnf_) {
        std::vector<i64> scaled(row.size());
        for (size_t j = 0; j < row.size(); ++j)
            scaled[j] = checked_i64(i128(row[j]) * n, "power");
        gens.push_back(make_elem(a.ambient(), scaled));
    }
    return Subgroup(a.ambient(), gens);
}

Subgroup generated(const FinAbGroup& ambient, const std::vector<ClassElem>& elems) {
    return Subgroup(ambient, elems);
}

}  // namespace steinitz
