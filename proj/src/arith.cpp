#include "steinitz/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace steinitz {

namespace {
constexpr i64 kSieveBound = 1000000;

std::vector<i64> build_sieve() {
    std::vector<bool> composite(kSieveBound + 1, false);
    std::vector<i64> primes;
    for (i64 i = 2; i <= kSieveBound; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (i64 j = i * i; j <= kSieveBound; j += i) composite[j] = true;
    }
    return primes;
}

i64 mul_mod(i64 a, i64 b, i64 m) { return i64((i128(a) * b) % m); }

bool miller_rabin(i64 n) {
    if (n < 2) return false;
    for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    i64 d = n - 1;
    int s = 0;
    while (d % 2 == 0) d /= 2, ++s;
    // Deterministic witness set for n < 3.3 * 10^24.
    for (i64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        i64 x = mod_pow(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}
}  // namespace

const std::vector<i64>& small_primes() {
    static const std::vector<i64> primes = build_sieve();
    return primes;
}

bool is_prime(i64 n) {
    if (n < 2) return false;
    if (n <= kSieveBound) {
        const auto& ps = small_primes();
        return std::binary_search(ps.begin(), ps.end(), n);
    }
    return miller_rabin(n);
}

Factored factorize(i64 n) {
    if (n <= 0) throw domain_error("factorize: argument must be positive");
    Factored out;
    out.value = n;
    for (i64 p : small_primes()) {
        if (p * p > n) break;
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) n /= p, ++e;
        out.factors.emplace_back(p, e);
    }
    if (n > 1) {
        if (!is_prime(n))
            throw capacity_error("factorize: cofactor " + std::to_string(n) +
                                 " is beyond the trial-division range");
        out.factors.emplace_back(n, 1);
    }
    return out;
}

i64 gcd(i64 a, i64 b) { return std::gcd(a, b); }

i64 ext_gcd(i64 a, i64 b, i64& x, i64& y) {
    if (b == 0) {
        x = (a < 0) ? -1 : 1;
        y = 0;
        return a < 0 ? -a : a;
    }
    i64 x1, y1;
    i64 g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

i64 mod_pow(i64 base, i64 exp, i64 mod) {
    if (mod <= 0) throw domain_error("mod_pow: modulus must be positive");
    if (exp < 0) throw domain_error("mod_pow: exponent must be non-negative");
    i64 b = base % mod;
    if (b < 0) b += mod;
    i64 r = 1 % mod;
    while (exp) {
        if (exp & 1) r = mul_mod(r, b, mod);
        b = mul_mod(b, b, mod);
        exp >>= 1;
    }
    return r;
}

i64 mod_inverse(i64 a, i64 mod) {
    i64 x, y;
    i64 g = ext_gcd(((a % mod) + mod) % mod, mod, x, y);
    if (g != 1) throw domain_error("mod_inverse: arguments are not coprime");
    return ((x % mod) + mod) % mod;
}

int kronecker(i64 a, i64 n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if ((a % 2 == 0) && (n % 2 == 0)) return 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    while (n % 2 == 0) {
        n /= 2;
        i64 r = ((a % 8) + 8) % 8;
        if (r == 3 || r == 5) result = -result;
    }
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            i64 r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

std::optional<i64> perfect_sqrt(i64 n) {
    if (n < 0) return std::nullopt;
    i64 r = i64(std::sqrt(double(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    if (r * r == n) return r;
    return std::nullopt;
}

std::optional<i64> sqrt_mod(i64 a, i64 p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    if (p == 2) return a % 2;
    if (kronecker(a, p) != 1) return std::nullopt;
    if (p % 4 == 3) {
        i64 r = mod_pow(a, (p + 1) / 4, p);
        return std::min(r, p - r);
    }
    // Tonelli-Shanks.
    i64 q = p - 1;
    int s = 0;
    while (q % 2 == 0) q /= 2, ++s;
    i64 z = 2;
    while (kronecker(z, p) != -1) ++z;
    i64 m = s;
    i64 c = mod_pow(z, q, p);
    i64 t = mod_pow(a, q, p);
    i64 r = mod_pow(a, (q + 1) / 2, p);
    while (t != 1) {
        i64 i = 0, tt = t;
        while (tt != 1) {
            tt = mul_mod(tt, tt, p);
            ++i;
        }
        i64 b = c;
        for (i64 j = 0; j < m - i - 1; ++j) b = mul_mod(b, b, p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    return std::min(r, p - r);
}

i64 l_part(const Factored& n, i64 l) {
    if (!is_prime(l)) throw domain_error("l_part: l must be prime");
    for (const auto& [p, e] : n.factors) {
        if (p != l) continue;
        i64 out = 1;
        for (int i = 0; i < e; ++i) out *= l;
        return out;
    }
    return 1;
}

i64 l_part(i64 n, i64 l) {
    if (n <= 0) throw domain_error("l_part: n must be positive");
    if (!is_prime(l)) throw domain_error("l_part: l must be prime");
    i64 out = 1;
    while (n % l == 0) n /= l, out *= l;
    return out;
}

i64 mcd_lemma_gcd(const Factored& e, i64 m) {
    if (m <= 0 || e.value <= 0 || m % e.value != 0)
        throw domain_error("mcd_lemma_gcd: e must divide m");
    if (e.value == 1) return 0;  // empty gcd, target (e-1)m/e = 0
    i64 g = 0;
    for (const auto& [l, exp] : e.factors) {
        (void)exp;
        g = gcd(g, (l - 1) * (m / l_part(e, l)));
    }
    i64 target = (e.value - 1) * (m / e.value);
    if (g == 0 || target % g != 0)
        throw consistency_error("mcd_lemma_gcd: divisibility guarantee violated");
    return g;
}

std::map<i64, i64> bezout_decompose(const Factored& e, i64 m) {
    if (e.value <= 1) throw domain_error("bezout_decompose: e must exceed 1");
    if (m <= 0 || m % e.value != 0)
        throw domain_error("bezout_decompose: e must divide m");
    std::vector<i64> primes, coeffs;
    for (const auto& [l, exp] : e.factors) {
        (void)exp;
        primes.push_back(l);
        coeffs.push_back((l - 1) * (m / l_part(e, l)));
    }
    // Iterated extended gcd: combo holds Bezout coefficients for g.
    std::vector<i64> combo{1};
    i64 g = coeffs[0];
    for (size_t i = 1; i < coeffs.size(); ++i) {
        i64 u, v;
        i64 g2 = ext_gcd(g, coeffs[i], u, v);
        for (auto& c : combo) c = checked_i64(i128(c) * u, "bezout_decompose");
        combo.push_back(v);
        g = g2;
    }
    i64 target = (e.value - 1) * (m / e.value);
    if (target % g != 0)
        throw consistency_error("bezout_decompose: target not divisible by gcd");
    i64 scale = target / g;
    std::map<i64, i64> out;
    i128 check = 0;
    for (size_t i = 0; i < primes.size(); ++i) {
        i64 b = checked_i64(i128(combo[i]) * scale, "bezout_decompose");
        out[primes[i]] = b;
        check += i128(b) * coeffs[i];
    }
    if (check != i128(target))
        throw consistency_error("bezout_decompose: identity check failed");
    return out;
}

bool congruence_power(i64 x, i64 m, i64 n) {
    if (m <= 0 || n <= 0)
        throw domain_error("congruence_power: m and n must be positive");
    i64 xm = ((x % m) + m) % m;
    if (xm != 1 % m) return false;
    for (const auto& [q, e] : factorize(n).factors) {
        (void)e;
        if (m % q != 0) return false;
    }
    i64 mn = checked_i64(i128(m) * n, "congruence_power");
    if (mod_pow(x, n, mn) != 1 % mn)
        throw consistency_error("congruence_power: conclusion failed despite hypotheses");
    return true;
}

std::vector<i64> invariant_factors(const std::vector<i64>& orders) {
    if (orders.empty()) throw domain_error("invariant_factors: empty input");
    // Collect per-prime exponents, sorted descending.
    std::map<i64, std::vector<int>> exps;
    for (i64 n : orders) {
        if (n <= 0) throw domain_error("invariant_factors: orders must be positive");
        for (const auto& [p, e] : factorize(n).factors) exps[p].push_back(e);
    }
    size_t rank = 0;
    for (auto& [p, es] : exps) {
        std::sort(es.rbegin(), es.rend());
        rank = std::max(rank, es.size());
    }
    std::vector<i64> chain;
    for (size_t i = 0; i < rank; ++i) {
        i128 f = 1;
        for (const auto& [p, es] : exps) {
            if (i >= es.size()) continue;
            for (int j = 0; j < es[i]; ++j) f *= p;
        }
        chain.push_back(checked_i64(f, "invariant_factors"));
    }
    while (chain.size() > 1 && chain.back() == 1) chain.pop_back();
    if (chain.empty()) chain.push_back(1);
    return chain;
}

}  // namespace steinitz
