#include "steinitz/quadfield.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace steinitz {

namespace {
i64 ipow(i64 b, int e) {
    i128 r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return checked_i64(r, "ipow");
}

}  // namespace

Rat::Rat(i64 n, i64 d) : num(n), den(d) {
    if (den == 0) throw domain_error("Rat: zero denominator");
    if (den < 0) num = -num, den = -den;
    i64 g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) num /= g, den /= g;
}

namespace {
Rat rat_from(i128 n, i128 d) {
    if (d < 0) n = -n, d = -d;
    i128 a = n < 0 ? -n : n, b = d, t;
    while (b) t = a % b, a = b, b = t;
    if (a > 1) n /= a, d /= a;
    return Rat(checked_i64(n, "Rat"), checked_i64(d, "Rat"));
}
}  // namespace

Rat operator+(const Rat& a, const Rat& b) {
    return rat_from(i128(a.num) * b.den + i128(b.num) * a.den, i128(a.den) * b.den);
}
Rat operator-(const Rat& a, const Rat& b) {
    return rat_from(i128(a.num) * b.den - i128(b.num) * a.den, i128(a.den) * b.den);
}
Rat operator*(const Rat& a, const Rat& b) {
    return rat_from(i128(a.num) * b.num, i128(a.den) * b.den);
}
Rat operator/(const Rat& a, const Rat& b) {
    if (b.num == 0) throw domain_error("Rat: division by zero");
    return rat_from(i128(a.num) * b.den, i128(a.den) * b.num);
}
Rat operator-(const Rat& a) { return Rat(-a.num, a.den); }

std::string to_string(const Rat& r) {
    return r.den == 1 ? std::to_string(r.num)
                      : std::to_string(r.num) + "/" + std::to_string(r.den);
}

bool rat_is_square(const Rat& r, Rat* root) {
    if (r.num < 0) return false;
    auto n = perfect_sqrt(r.num);
    auto d = perfect_sqrt(r.den);
    if (!n || !d) return false;
    if (root) *root = Rat(*n, *d);
    return true;
}

QuadField make_field(i64 d) {
    if (d >= 0)
        throw unsupported_error("make_field: real quadratic fields are out of scope");
    Factored f = factorize(-d);
    for (const auto& [p, e] : f.factors)
        if (e > 1) throw domain_error("make_field: d must be squarefree");
    QuadField k;
    k.d = d;
    k.disc = (((d % 4) + 4) % 4 == 1) ? d : 4 * d;
    return k;
}

FieldElem fe(i64 a, i64 b) { return FieldElem(Rat(a), Rat(b)); }

FieldElem add(const QuadField&, const FieldElem& x, const FieldElem& y) {
    return FieldElem(x.a + y.a, x.b + y.b);
}
FieldElem sub(const QuadField&, const FieldElem& x, const FieldElem& y) {
    return FieldElem(x.a - y.a, x.b - y.b);
}

FieldElem mul(const QuadField& k, const FieldElem& x, const FieldElem& y) {
    // w^2 = d (generic) or w^2 = w + (d-1)/4 (d = 1 mod 4).
    Rat cross = x.a * y.b + x.b * y.a;
    Rat bb = x.b * y.b;
    if (k.omega_half())
        return FieldElem(x.a * y.a + bb * Rat((k.d - 1) / 4), cross + bb);
    return FieldElem(x.a * y.a + bb * Rat(k.d), cross);
}

FieldElem conj(const QuadField& k, const FieldElem& x) {
    if (k.omega_half()) return FieldElem(x.a + x.b, -x.b);
    return FieldElem(x.a, -x.b);
}

FieldElem neg(const FieldElem& x) { return FieldElem(-x.a, -x.b); }

Rat norm(const QuadField& k, const FieldElem& x) {
    if (k.omega_half())
        return x.a * x.a + x.a * x.b + x.b * x.b * Rat((1 - k.d) / 4);
    return x.a * x.a - x.b * x.b * Rat(k.d);
}

std::string to_string(const QuadField& k, const FieldElem& x) {
    std::string w = k.omega_half() ? "(1+sqrt(" + std::to_string(k.d) + "))/2"
                                   : "sqrt(" + std::to_string(k.d) + ")";
    return to_string(x.a) + " + " + to_string(x.b) + "*" + w;
}

std::pair<Rat, Rat> sqrt_basis(const QuadField& k, const FieldElem& x) {
    if (k.omega_half()) return {x.a + x.b / Rat(2), x.b / Rat(2)};
    return {x.a, x.b};
}

namespace {
FieldElem from_sqrt_basis(const QuadField& k, const Rat& u, const Rat& v) {
    // u + v*sqrt(d) back into the (1, w) basis.
    if (k.omega_half()) return FieldElem(u - v, v * Rat(2));
    return FieldElem(u, v);
}
}  // namespace

bool is_square(const QuadField& k, const FieldElem& x, FieldElem* root) {
    auto [u, v] = sqrt_basis(k, x);
    if (v.num == 0) {
        Rat s;
        if (rat_is_square(u, &s)) {
            if (root) *root = from_sqrt_basis(k, s, Rat(0));
            return true;
        }
        if (rat_is_square(u / Rat(k.d), &s)) {
            if (root) *root = from_sqrt_basis(k, Rat(0), s);
            return true;
        }
        return false;
    }
    // (p + q*sqrt(d))^2 = x needs p^2 = (u +- s)/2 with s = sqrt(N(x)).
    Rat n = u * u - v * v * Rat(k.d);
    Rat s;
    if (!rat_is_square(n, &s)) return false;
    for (Rat cand : {(u + s) / Rat(2), (u - s) / Rat(2)}) {
        Rat p;
        if (!rat_is_square(cand, &p) || p.num == 0) continue;
        Rat q = v / (p * Rat(2));
        // Verify exactly.
        if (p * p + q * q * Rat(k.d) == u && p * q * Rat(2) == v) {
            if (root) *root = from_sqrt_basis(k, p, q);
            return true;
        }
    }
    return false;
}

std::vector<FieldElem> unit_square_reps(const QuadField& k) {
    if (k.d == -1) return {fe(1), fe(0, 1)};   // 1, i
    if (k.d == -3) return {fe(1), fe(0, 1)};   // 1, zeta_6
    return {fe(1), fe(-1)};
}

std::string to_string(const PrimeIdeal& pr) {
    if (pr.residue_degree == 2) return "(" + std::to_string(pr.p) + ")";
    return "(" + std::to_string(pr.p) + ", w-" + std::to_string(pr.r) + ")" +
           (pr.ramified ? "^ram" : "");
}

std::vector<PrimeIdeal> split_prime(const QuadField& k, i64 p) {
    if (!is_prime(p)) throw domain_error("split_prime: p must be prime");
    int sym = kronecker(k.disc, p);
    if (sym == -1) return {PrimeIdeal{p, 2, false, 0}};
    if (sym == 0) {
        i64 r;
        if (p == 2) {
            r = ((k.d % 2) + 2) % 2;  // root of x^2 - d mod 2
        } else if (k.omega_half()) {
            r = (p + 1) / 2;          // double root of x^2 - x - (d-1)/4
        } else {
            r = 0;                    // p | d
        }
        return {PrimeIdeal{p, 1, true, r}};
    }
    i64 r1, r2;
    if (p == 2) {
        // Only d = 1 mod 8 splits at 2; the roots of x^2 - x - (d-1)/4 are 0, 1.
        r1 = 0;
        r2 = 1;
    } else if (k.omega_half()) {
        i64 s = *sqrt_mod(((k.d % p) + p) % p, p);
        i64 inv2 = mod_inverse(2, p);
        r1 = (i128(1 + s) * inv2) % p;
        r2 = (i128((1 - s) % p + p) * inv2) % p;
        if (r1 > r2) std::swap(r1, r2);
    } else {
        i64 s = *sqrt_mod(((k.d % p) + p) % p, p);
        r1 = std::min(s, p - s);
        r2 = p - r1;
    }
    return {PrimeIdeal{p, 1, false, r1}, PrimeIdeal{p, 1, false, r2}};
}

FracIdeal mul(const FracIdeal& a, const FracIdeal& b) {
    FracIdeal out = a;
    for (const auto& [pr, e] : b.v) {
        out.v[pr] += e;
        if (out.v[pr] == 0) out.v.erase(pr);
    }
    return out;
}

FracIdeal inverse(const FracIdeal& a) {
    FracIdeal out;
    for (const auto& [pr, e] : a.v) out.v[pr] = -e;
    return out;
}

FracIdeal ideal_sqrt(const FracIdeal& I) {
    FracIdeal out;
    for (const auto& [pr, e] : I.v) {
        if (e % 2 != 0)
            throw not_a_square_error("ideal_sqrt: odd exponent at " + to_string(pr));
        out.v[pr] = e / 2;
    }
    return out;
}

Rat ideal_norm(const FracIdeal& I) {
    Rat n(1);
    for (const auto& [pr, e] : I.v) {
        if (e >= 0)
            n = n * Rat(ipow(pr.norm(), int(e)));
        else
            n = n / Rat(ipow(pr.norm(), int(-e)));
    }
    return n;
}

std::string to_string(const FracIdeal& I) {
    if (I.v.empty()) return "(1)";
    std::string s;
    for (const auto& [pr, e] : I.v) {
        if (!s.empty()) s += " * ";
        s += to_string(pr);
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

namespace {

// Valuation of an integral element (a + b*w) at a degree-1 or ramified prime,
// by Hensel-lifting the root r of the minimal polynomial of w.
i64 val_integral(const QuadField& k, const PrimeIdeal& pr, i64 a, i64 b) {
    i128 nrm;
    if (k.omega_half())
        nrm = i128(a) * a + i128(a) * b + i128(b) * b * ((1 - k.d) / 4);
    else
        nrm = i128(a) * a - i128(b) * b * k.d;
    if (nrm == 0) throw domain_error("valuation: zero element");
    i64 p = pr.p;
    int m = 0;
    while (nrm % p == 0) nrm /= p, ++m;
    if (pr.residue_degree == 2) {
        if (m % 2 != 0) throw consistency_error("valuation: odd norm valuation at inert prime");
        return m / 2;
    }
    if (pr.ramified) return m;
    if (m == 0) return 0;
    // Split prime: Hensel-lift the root r of the minimal polynomial of w
    // (f = x^2 - d, or x^2 - x - (d-1)/4 when w = (1+sqrt(d))/2) and read off
    // the largest j <= m with a + b*r = 0 (mod p^j).
    const i64 c0 = k.omega_half() ? (k.d - 1) / 4 : 0;
    auto f_of = [&](i64 r, i64 mod) {
        i128 fr = k.omega_half() ? i128(r) * r - r - c0 : i128(r) * r - k.d;
        fr %= mod;
        if (fr < 0) fr += mod;
        return i64(fr);
    };
    i64 fp = k.omega_half() ? ((2 * pr.r - 1) % p + p) % p : ((2 * pr.r) % p + p) % p;
    i64 fpinv = mod_inverse(fp, p);
    i64 pj = p;
    i64 r = pr.r % p;
    i64 v = 0;
    for (int j = 1; j <= m; ++j) {
        if ((((i128(a) + i128(b) * r) % pj) + pj) % pj != 0) break;
        v = j;
        if (j == m) break;
        i64 pj1 = checked_i64(i128(pj) * p, "valuation");
        // r' = r - f(r) * inv(f'(r))  (mod p^(j+1)); f(r) is divisible by p^j.
        i64 t = (f_of(r, pj1) / pj) % p;
        i64 corr = i64((i128(t) * fpinv) % p);
        i64 r1 = checked_i64(((i128(r) - i128(corr) * pj) % pj1 + pj1) % pj1, "valuation");
        if (f_of(r1, pj1) != 0) throw consistency_error("valuation: Hensel lift failed");
        r = r1;
        pj = pj1;
    }
    return v;
}

}  // namespace

i64 valuation(const QuadField& k, const PrimeIdeal& pr, const FieldElem& x) {
    if (x.is_zero()) throw domain_error("valuation: zero element");
    i64 den = std::lcm(x.a.den, x.b.den);
    i64 a = checked_i64(i128(x.a.num) * (den / x.a.den), "valuation");
    i64 b = checked_i64(i128(x.b.num) * (den / x.b.den), "valuation");
    i64 v = val_integral(k, pr, a, b);
    // Subtract the valuation of the rational denominator.
    i64 q = den;
    int vden = 0;
    while (q % pr.p == 0) q /= pr.p, ++vden;
    i64 e = pr.ramified ? 2 : 1;
    return v - e * vden;
}

FracIdeal element_ideal(const QuadField& k, const FieldElem& alpha) {
    if (alpha.is_zero()) throw domain_error("element_ideal: zero element");
    i64 den = std::lcm(alpha.a.den, alpha.b.den);
    i64 a = checked_i64(i128(alpha.a.num) * (den / alpha.a.den), "element_ideal");
    i64 b = checked_i64(i128(alpha.b.num) * (den / alpha.b.den), "element_ideal");
    i128 nrm;
    if (k.omega_half())
        nrm = i128(a) * a + i128(a) * b + i128(b) * b * ((1 - k.d) / 4);
    else
        nrm = i128(a) * a - i128(b) * b * k.d;
    i64 n = checked_i64(nrm < 0 ? -nrm : nrm, "element_ideal");
    FracIdeal out;
    std::set<i64> ps;
    for (const auto& [p, e] : factorize(n).factors) ps.insert(p), (void)e;
    for (const auto& [p, e] : factorize(den).factors) ps.insert(p), (void)e;
    for (i64 p : ps) {
        int vden = 0;
        i64 q = den;
        while (q % p == 0) q /= p, ++vden;
        for (const auto& pr : split_prime(k, p)) {
            i64 e = pr.ramified ? 2 : 1;
            i64 v = val_integral(k, pr, a, b) - e * vden;
            if (v != 0) out.v[pr] = v;
        }
    }
    return out;
}

Form principal_form(const QuadField& k) {
    if (((k.disc % 2) + 2) % 2 == 0) return Form{1, 0, -k.disc / 4};
    return Form{1, 1, (1 - k.disc) / 4};
}

namespace {
// b normalized into (-a, a]; c recomputed from the discriminant.
Form normalize_form(const QuadField& k, Form f) {
    i64 twoa = 2 * f.a;
    i64 b = f.b % twoa;
    if (b <= -f.a) b += twoa;
    if (b > f.a) b -= twoa;
    i128 c = (i128(b) * b - k.disc) / (4 * i128(f.a));
    return Form{f.a, b, checked_i64(c, "normalize_form")};
}
}  // namespace

Form reduce_form(const QuadField& k, Form f) {
    if (f.a <= 0) throw domain_error("reduce_form: leading coefficient must be positive");
    if (i128(f.b) * f.b - 4 * i128(f.a) * f.c != i128(k.disc))
        throw domain_error("reduce_form: discriminant mismatch");
    f = normalize_form(k, f);
    while (f.a > f.c) {
        f = Form{f.c, -f.b, f.a};
        f = normalize_form(k, f);
    }
    if (f.a == f.c && f.b < 0) f.b = -f.b;
    return f;
}

Form inverse_form(const QuadField& k, const Form& f) {
    return reduce_form(k, Form{f.a, -f.b, f.c});
}

std::vector<Form> reduced_forms(const QuadField& k) {
    std::vector<Form> out;
    i64 D = k.disc;
    for (i64 a = 1; 3 * a * a <= -D; ++a) {
        for (i64 b = -a + 1; b <= a; ++b) {
            if (((b - D) % 2) != 0) continue;
            i128 num = i128(b) * b - D;
            if (num % (4 * a) != 0) continue;
            i64 c = checked_i64(num / (4 * a), "reduced_forms");
            if (c < a) continue;
            if (a == c && b < 0) continue;
            i64 g = std::gcd(std::gcd(a, b < 0 ? -b : b), c);
            if (g != 1) continue;
            out.push_back(Form{a, b, c});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Form compose_forms(const QuadField& k, const Form& f, const Form& g) {
    // Transform g to a concordant form with leading coefficient coprime to f.a,
    // then apply Dirichlet composition.
    i64 a1 = f.a, b1 = f.b;
    i64 m = 0, B2 = 0;
    bool found = false;
    for (i64 L = 0; L <= 64 && !found; ++L) {
        for (i64 x = -L; x <= L && !found; ++x) {
            for (i64 y = -L; y <= L && !found; ++y) {
                if (std::max(x < 0 ? -x : x, y < 0 ? -y : y) != L) continue;
                if (std::gcd(x, y) != 1) continue;
                i128 val = i128(g.a) * x * x + i128(g.b) * x * y + i128(g.c) * y * y;
                if (val <= 0) continue;
                i64 mv = checked_i64(val, "compose_forms");
                if (std::gcd(mv, a1) != 1) continue;
                // Complete (x, y) to a determinant-1 change of basis.
                i64 u, v;
                ext_gcd(x, y, u, v);  // x*u + y*v = 1
                i64 z = -v, w = u;
                i128 bb = 2 * i128(g.a) * x * z + i128(g.b) * (i128(x) * w + i128(y) * z) +
                          2 * i128(g.c) * y * w;
                m = mv;
                B2 = checked_i64(bb, "compose_forms");
                found = true;
            }
        }
    }
    if (!found) throw consistency_error("compose_forms: no concordant representative found");
    // Solve B = b1 (mod 2*a1), B = B2 (mod 2*m).
    i64 diff = B2 - b1;
    if (diff % 2 != 0) throw consistency_error("compose_forms: parity mismatch");
    i64 t = m == 1 ? 0
                   : i64((i128(((diff / 2) % m + m) % m) * mod_inverse(a1 % m, m)) % m);
    i128 B = i128(b1) + 2 * i128(a1) * t;
    i128 A = i128(a1) * m;
    i128 Cnum = B * B - k.disc;
    if (Cnum % (4 * A) != 0) throw consistency_error("compose_forms: concordance failed");
    Form out{checked_i64(A, "compose_forms"), checked_i64(B, "compose_forms"),
             checked_i64(Cnum / (4 * A), "compose_forms")};
    return reduce_form(k, out);
}

Form form_of_prime(const QuadField& k, const PrimeIdeal& pr) {
    if (pr.residue_degree == 2)
        throw domain_error("form_of_prime: inert primes are principal; no degree-1 form");
    // Ideal (p, w - r) is the lattice Z*p + Z*(-b + sqrt(D))/2.
    i64 b = k.omega_half() ? 2 * pr.r - 1 : 2 * pr.r;
    i64 twop = 2 * pr.p;
    b %= twop;
    if (b < 0) b += twop;
    i128 cnum = i128(b) * b - k.disc;
    if (cnum % (4 * pr.p) != 0) throw consistency_error("form_of_prime: bad root");
    Form f{pr.p, b, checked_i64(cnum / (4 * pr.p), "form_of_prime")};
    return reduce_form(k, f);
}

ClassGroup::ClassGroup(const QuadField& k) : k_(k), forms_(reduced_forms(k)) {
    const i64 h = i64(forms_.size());
    std::map<Form, int> index;
    for (int i = 0; i < h; ++i) index[forms_[size_t(i)]] = i;
    const int id = index.at(principal_form(k));

    std::vector<std::vector<int>> table(static_cast<size_t>(h),
                                        std::vector<int>(static_cast<size_t>(h)));
    for (int i = 0; i < h; ++i)
        for (int j = i; j < h; ++j) {
            int r = index.at(compose_forms(k, forms_[size_t(i)], forms_[size_t(j)]));
            table[size_t(i)][size_t(j)] = r;
            table[size_t(j)][size_t(i)] = r;
        }

    auto pow_idx = [&](int base, i64 e) {
        int acc = id;
        int b = base;
        while (e) {
            if (e & 1) acc = table[size_t(acc)][size_t(b)];
            b = table[size_t(b)][size_t(b)];
            e >>= 1;
        }
        return acc;
    };

    // Invariant factors from the counts #{x : x^(p^j) = e}.
    std::map<i64, std::vector<int>> partitions;  // p -> lambda_1 >= lambda_2 >= ...
    for (const auto& [p, e] : factorize(h == 0 ? 1 : h).factors) {
        (void)e;
        std::vector<int> conj;  // conj[j-1] = #{i : lambda_i >= j}
        int prev = 0;
        i64 pj = 1;
        while (true) {
            pj *= p;
            int cnt = 0;
            for (int i = 0; i < h; ++i)
                if (pow_idx(i, pj) == id) ++cnt;
            int logc = 0;
            for (i64 t = cnt; t > 1; t /= p) ++logc;
            if (logc == prev) break;
            conj.push_back(logc - prev);
            prev = logc;
        }
        int rank = conj.empty() ? 0 : conj[0];
        std::vector<int> lambda(size_t(rank), 0);
        for (int j = 0; j < int(conj.size()); ++j)
            for (int i = 0; i < conj[size_t(j)]; ++i) lambda[size_t(i)] += 1;
        partitions[p] = lambda;
    }
    size_t rank = 1;
    for (const auto& [p, lambda] : partitions) rank = std::max(rank, lambda.size());
    std::vector<i64> chain;
    for (size_t i = 0; i < rank; ++i) {
        i64 f = 1;
        for (const auto& [p, lambda] : partitions)
            if (i < lambda.size()) f *= ipow(p, lambda[i]);
        chain.push_back(f);
    }
    group_ = FinAbGroup(chain);

    // Greedy basis matching the invariant chain.
    auto closure = [&](const std::vector<int>& gens) {
        std::set<int> seen{id};
        std::vector<int> frontier{id};
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int x : frontier)
                for (int g : gens) {
                    int y = table[size_t(x)][size_t(g)];
                    if (seen.insert(y).second) next.push_back(y);
                }
            frontier = std::move(next);
        }
        return seen;
    };
    auto order_of = [&](int x) {
        i64 o = 1;
        int cur = x;
        while (cur != id) {
            cur = table[size_t(cur)][size_t(x)];
            ++o;
        }
        return o;
    };

    std::vector<int> gens;
    i64 target = 1;
    for (size_t i = 0; i < chain.size(); ++i) {
        target *= chain[i];
        bool ok = false;
        for (int cand = 0; cand < h && !ok; ++cand) {
            if (order_of(cand) != chain[i]) continue;
            auto trial = gens;
            trial.push_back(cand);
            if (i64(closure(trial).size()) == target) {
                gens = trial;
                ok = true;
            }
        }
        if (!ok) throw consistency_error("ClassGroup: no basis element of required order");
    }

    for (int g : gens) basis_forms_.push_back(forms_[size_t(g)]);

    // Dictionary: every exponent tuple maps to a distinct form.
    std::vector<i64> t(chain.size(), 0);
    while (true) {
        int acc = id;
        for (size_t i = 0; i < gens.size(); ++i) acc = table[size_t(acc)][size_t(pow_idx(gens[i], t[i]))];
        auto [it, fresh] = dictionary_.emplace(forms_[size_t(acc)], ClassElem{t});
        if (!fresh) throw consistency_error("ClassGroup: basis does not span freely");
        (void)it;
        size_t kk = 0;
        while (kk < t.size() && ++t[kk] == chain[kk]) t[kk++] = 0;
        if (kk == t.size()) break;
    }
    if (i64(dictionary_.size()) != h)
        throw consistency_error("ClassGroup: dictionary size mismatch");
}

ClassElem ClassGroup::class_of_form(const Form& f) const {
    auto it = dictionary_.find(reduce_form(k_, f));
    if (it == dictionary_.end())
        throw domain_error("class_of_form: not a form of this discriminant");
    return it->second;
}

ClassElem ClassGroup::class_of_prime(const PrimeIdeal& pr) const {
    if (pr.residue_degree == 2) return zero_elem(group_);
    return class_of_form(form_of_prime(k_, pr));
}

ClassElem ClassGroup::class_of_ideal(const FracIdeal& I) const {
    ClassElem acc = zero_elem(group_);
    for (const auto& [pr, e] : I.v)
        acc = add(group_, acc, scale(group_, class_of_prime(pr), e));
    return acc;
}

bool ClassGroup::is_principal(const FracIdeal& I) const {
    return is_zero(class_of_ideal(I));
}

std::vector<PrimeIdeal> degree_one_primes(const QuadField& k, i64 bound) {
    if (bound > 1000000)
        throw capacity_error("degree_one_primes: bound exceeds the sieve range");
    std::vector<PrimeIdeal> out;
    for (i64 p : small_primes()) {
        if (p > bound) break;
        if (kronecker(k.disc, p) != 1) continue;
        for (const auto& pr : split_prime(k, p)) out.push_back(pr);
    }
    return out;
}

std::optional<FieldElem> principal_generator(const QuadField& k, const FracIdeal& I) {
    for (const auto& [pr, e] : I.v)
        if (e < 0) throw domain_error("principal_generator: integral ideals only");
    Rat nr = ideal_norm(I);
    i64 N = nr.num;  // integral ideal: denominator 1
    // Enumerate all elements of norm N deterministically (|b| ascending).
    std::vector<std::pair<i64, i64>> coords;
    if (k.omega_half()) {
        // N = a^2 + ab + b^2 (1-d)/4; for fixed b: 2a = -b +- sqrt(b^2 d + 4N).
        for (i64 babs = 0;; ++babs) {
            i128 disc = i128(babs) * babs * k.d + 4 * i128(N);
            if (disc < 0) break;
            auto s = perfect_sqrt(checked_i64(disc, "principal_generator"));
            if (!s) continue;
            for (i64 b : (babs == 0 ? std::vector<i64>{0} : std::vector<i64>{babs, -babs}))
                for (i64 num : {-b + *s, -b - *s}) {
                    if (num % 2 != 0) continue;
                    coords.emplace_back(num / 2, b);
                }
        }
    } else {
        for (i64 babs = 0; i128(babs) * babs * (-k.d) <= N; ++babs) {
            i64 rem = checked_i64(N - i128(babs) * babs * (-k.d), "principal_generator");
            auto a = perfect_sqrt(rem);
            if (!a) continue;
            for (i64 b : (babs == 0 ? std::vector<i64>{0} : std::vector<i64>{babs, -babs}))
                for (i64 av : (*a == 0 ? std::vector<i64>{0} : std::vector<i64>{*a, -*a}))
                    coords.emplace_back(av, b);
        }
    }
    for (const auto& [a, b] : coords) {
        if (a == 0 && b == 0) continue;
        FieldElem cand = fe(a, b);
        if (norm(k, cand) != Rat(N)) continue;
        if (element_ideal(k, cand) == I) return cand;
    }
    return std::nullopt;
}

}  // namespace steinitz
