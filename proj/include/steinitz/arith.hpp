#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "steinitz/common.hpp"

namespace steinitz {

// Positive integer together with its prime factorization.
// Invariant: value == prod p^e, primes strictly increasing, e >= 1.
struct Factored {
    i64 value = 1;
    std::vector<std::pair<i64, int>> factors;

    bool operator==(const Factored&) const = default;
};

// Primes below 10^6, sieved once.
const std::vector<i64>& small_primes();

bool is_prime(i64 n);

// Trial division against the sieve, with a deterministic Miller-Rabin
// fallback so a single large prime cofactor is still handled exactly.
Factored factorize(i64 n);

i64 gcd(i64 a, i64 b);
// g = a*x + b*y
i64 ext_gcd(i64 a, i64 b, i64& x, i64& y);
i64 mod_pow(i64 base, i64 exp, i64 mod);
i64 mod_inverse(i64 a, i64 mod);

// Kronecker symbol (a|n).
int kronecker(i64 a, i64 n);

// Exact integer square root of n >= 0 if n is a perfect square.
std::optional<i64> perfect_sqrt(i64 n);

// Square root of a modulo an odd prime p, if one exists (Tonelli-Shanks).
std::optional<i64> sqrt_mod(i64 a, i64 p);

// Largest power of l dividing n (1 when l does not divide n).
i64 l_part(const Factored& n, i64 l);
i64 l_part(i64 n, i64 l);

// gcd over primes l | e of (l-1) * m / e(l).  Requires e | m; returns 0 for
// e = 1 (empty gcd, the degenerate case).  The result always divides
// (e-1) * m / e; a failure of that check is a bug and raises consistency_error.
i64 mcd_lemma_gcd(const Factored& e, i64 m);

// Integers b_l with  sum_{l|e} b_l * (l-1) * m/e(l)  =  (e-1) * m/e.
// Deterministic: primes processed in increasing order through iterated
// extended gcd, then scaled.  Requires e | m and e > 1.
std::map<i64, i64> bezout_decompose(const Factored& e, i64 m);

// True iff x = 1 (mod m) and every prime of n divides m.  When true, the
// conclusion x^n = 1 (mod mn) is re-verified by modular exponentiation
// (consistency_error otherwise).
bool congruence_power(i64 x, i64 m, i64 n);

// The unique chain n_1 | n_2 | ... (descending divisibility, n_{i+1} | n_i)
// presenting prod C(orders_i); trailing 1s dropped, trivial group -> [1].
std::vector<i64> invariant_factors(const std::vector<i64>& orders);

}  // namespace steinitz
