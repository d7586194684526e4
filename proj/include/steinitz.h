/* C interface to the Steinitz realizable-class library.
 *
 * All structured results are returned as JSON text allocated by the library;
 * release them with stz_string_free.  Functions return STZ_OK on success and
 * a status code otherwise; stz_last_error() describes the most recent failure
 * on the calling thread.
 */
#ifndef STEINITZ_H
#define STEINITZ_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum stz_status {
    STZ_OK = 0,
    STZ_ERR_INVALID = 1,       /* malformed arguments */
    STZ_ERR_DOMAIN = 2,        /* mathematically invalid input */
    STZ_ERR_UNSUPPORTED = 3,   /* out-of-scope request */
    STZ_ERR_NOT_SQUARE = 4,    /* ideal square root of an odd exponent */
    STZ_ERR_DEGENERATE = 5,    /* alpha (or a product) is a square */
    STZ_ERR_CAPACITY = 6,      /* configured enumeration cap exceeded */
    STZ_ERR_INCONSISTENT = 7,  /* independent computation paths disagree */
    STZ_ERR_VERIFICATION = 8,  /* enumerated data contradicts a proved bound */
    STZ_ERR_INTERNAL = 9
} stz_status;

/* Field context: an imaginary quadratic field with its class group and the
 * sampling state for norm-condition subgroups. */
typedef struct stz_field stz_field;

/* d must be a squarefree negative integer. */
stz_status stz_field_create(int64_t d, stz_field** out);
void stz_field_destroy(stz_field* field);

/* Stabilization window (consecutive stagnant qualifying primes) and the norm
 * ceiling for prime sampling.  Resets memoized samples. */
stz_status stz_field_set_policy(stz_field* field, int window, int64_t max_norm);
/* Directory for the witness cache (JSON lines); NULL disables caching. */
stz_status stz_field_set_cache_dir(stz_field* field, const char* dir);

/* Class group: {d, disc, h, invariant_factors, forms}. */
stz_status stz_class_group(stz_field* field, char** json_out);

/* Norm-condition subgroup for the given modulus; plus_minus != 0 allows
 * residues {1, m-1} instead of {1}. */
stz_status stz_w_group(stz_field* field, int64_t modulus, int plus_minus,
                       char** json_out);

/* Realizable-class interval for the abelian group C(factors[0]) x ... ;
 * factors are normalized to the invariant chain first. */
stz_status stz_realizable(stz_field* field, const int64_t* factors, size_t nfactors,
                          int alt_even_factor, char** json_out);

/* Special groups: "a4", "d2n:<odd n>", or "c2vec:<n>,<odd factors...>". */
stz_status stz_realizable_special(stz_field* field, const char* spec, char** json_out);

/* Sylow recomposition consistency check; fails with STZ_ERR_INCONSISTENT when
 * the product over Sylow subgroups disagrees with the direct evaluation. */
stz_status stz_sylow_check(stz_field* field, const int64_t* factors, size_t nfactors,
                           char** json_out);

/* Enumerate tame quadratic (group == 2) or biquadratic (group == 22)
 * extensions up to the prime norm bound. */
stz_status stz_enumerate(stz_field* field, int group, int64_t bound, char** json_out);

/* Enumerate, evaluate the engine, and verify containments.  group is 2 or 22.
 * STZ_ERR_VERIFICATION signals a contradiction of a proved bound. */
stz_status stz_verify(stz_field* field, int group, int64_t bound, char** json_out);

/* Whether every sampled subgroup used so far stabilized inside the window. */
stz_status stz_all_stabilized(stz_field* field, int* out);

/* Elementary sweeps and subgroup-law batteries; JSON report with pass/fail
 * per check.  Returns STZ_ERR_VERIFICATION when any check fails. */
stz_status stz_selftest(char** json_out);

const char* stz_last_error(void);
void stz_string_free(char* s);
const char* stz_version(void);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* STEINITZ_H */
