/*
 * aplcm - exact arithmetic for least common multiples of finite
 * arithmetic progressions u_k = u0 + k*r (gcd(u0, r) = 1), the lower
 * bounds u0 * r^e * (r+1)^n on L_n = lcm{u_0..u_n}, machine checks of
 * the supporting inequalities, and the boundary search at n = r^alpha.
 *
 * Conventions:
 *   - Arbitrary-precision values cross this API as decimal strings;
 *     fractions as "p/q". Indices and exponents (n, k, alpha, a, beta)
 *     are uint64_t.
 *   - Functions return aplcm_status; APLCM_OK is 0. On failure,
 *     aplcm_last_error() gives a message for the calling thread.
 *   - char** outputs are heap strings to release with aplcm_string_free.
 *     const char* accessors on a handle stay valid until the handle is
 *     freed and need no release.
 *   - Handles are opaque and freed with their matching *_free function.
 *     All operations on constructed handles are read-only and safe to
 *     call from multiple threads.
 */

#ifndef APLCM_H
#define APLCM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define APLCM_API __declspec(dllexport)
#else
#define APLCM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum aplcm_status {
    APLCM_OK = 0,
    APLCM_ERR_INVALID = 1,       /* malformed or out-of-range argument */
    APLCM_ERR_NOT_COPRIME = 2,   /* gcd(u0, r) != 1 */
    APLCM_ERR_HYPOTHESIS = 3,    /* claim hypothesis not satisfied */
    APLCM_ERR_CONTRADICTION = 4, /* exact arithmetic contradicted a proven identity: a bug */
    APLCM_ERR_NOMEM = 5,
    APLCM_ERR_INTERNAL = 6 /* unexpected failure */
} aplcm_status;

APLCM_API const char* aplcm_version(void);
APLCM_API const char* aplcm_status_name(aplcm_status st);

/* Message for the last failing call on this thread; "" if none. */
APLCM_API const char* aplcm_last_error(void);

APLCM_API void aplcm_string_free(char* s);

/* ---- progressions ------------------------------------------------ */

typedef struct aplcm_progression aplcm_progression;

/* u0, r as decimal strings; both >= 1 and coprime. */
APLCM_API aplcm_status aplcm_progression_new(const char* u0, const char* r,
                                             aplcm_progression** out);
APLCM_API void aplcm_progression_free(aplcm_progression* p);

/* u0 + k*r; k is a decimal string so huge indices are fine. */
APLCM_API aplcm_status aplcm_progression_term(const aplcm_progression* p, const char* k,
                                              char** out_term);

/* k_n = max{0, floor((n - u0)/(r + 1)) + 1}; needs n >= 1. */
APLCM_API aplcm_status aplcm_threshold_index(const aplcm_progression* p, uint64_t n,
                                             uint64_t* out_kn);

/* lcm{u_k..u_n} = A * C with C = (u_k*...*u_n)/(n-k)!. out_c is "p/q". */
APLCM_API aplcm_status aplcm_decompose(const aplcm_progression* p, uint64_t n, uint64_t k,
                                       char** out_lcm, char** out_c, char** out_a);

/* ---- lower bounds ------------------------------------------------ */

/*
 * Bound value u0 * r^e * (r+1)^n and its hypothesis:
 *   HONG_YANG  e = alpha                 needs alpha >= 1; hyp n > r^alpha
 *   MAIN       e = alpha + a - 2         needs a >= 2, alpha >= a, r >= a;
 *                                        hyp n >= 2*alpha*r
 *   COROLLARY  e = alpha + beta + a - 2  needs beta >= 1 as well;
 *                                        hyp n >= 2*(alpha+beta+a-2)*r
 * Unused parameters (a, beta) are ignored for kinds that lack them.
 */
typedef enum aplcm_bound_kind {
    APLCM_BOUND_HONG_YANG = 0,
    APLCM_BOUND_MAIN = 1,
    APLCM_BOUND_COROLLARY = 2
} aplcm_bound_kind;

APLCM_API aplcm_status aplcm_bound_value(const aplcm_progression* p, uint64_t n,
                                         aplcm_bound_kind kind, uint64_t alpha, uint64_t a,
                                         uint64_t beta, char** out_bound);

APLCM_API aplcm_status aplcm_hypothesis_holds(const aplcm_progression* p, uint64_t n,
                                              aplcm_bound_kind kind, uint64_t alpha, uint64_t a,
                                              uint64_t beta, int* out_holds);

/* r^alpha + 1 >= 2*(alpha+beta+a-2)*r, r as a decimal string. */
APLCM_API aplcm_status aplcm_corollary_dominates(uint64_t alpha, uint64_t beta, uint64_t a,
                                                 const char* r, int* out);

/* ---- verification ------------------------------------------------ */

/*
 * Claims, by token:
 *   lemma21     the cofactor L_n / C_{n,0} is a positive integer
 *   lemma22     L_n >= L_{n,k_n} >= C_{n,k_n} >= u0*(r+1)^n
 *   lemma31     n - k_n > (alpha+a-2)*r
 *   ineq3       n - k_n >= (n-1)*r/(r+1)          (needs n > u0)
 *   ineq5       (2*alpha*r-1)/(r+1) > alpha+a-2
 *   divstep     r^(alpha+a-2) divides A_{n,k_n}
 *   theorem11   L_n >= the HONG_YANG bound under its hypothesis
 *   theorem12   L_n >= the MAIN bound under its hypothesis
 *   corollary31 L_n >= the COROLLARY bound under its hypothesis
 */
APLCM_API size_t aplcm_claim_count(void);
APLCM_API const char* aplcm_claim_token(size_t i);

/*
 * 1 when the claim consumes the named parameter ("u0", "r", "n", "alpha",
 * "a", "beta"), 0 otherwise (including unknown claim or parameter names).
 */
APLCM_API int aplcm_claim_uses(const char* claim, const char* param);

/*
 * Cartesian sweep of one claim over inclusive parameter ranges.
 * Dimensions the claim does not consume are ignored. n comes from
 * [n_lo, n_hi] when has_n_range, otherwise from the hypothesis-anchored
 * window [threshold, threshold + n_extra] for claims that have an
 * n-threshold. Tuples violating coprimality or the claim's hypotheses
 * are skipped. Records are ordered lexicographically in
 * (u0, r, alpha, a, beta, n) regardless of `workers` (0 = all cores).
 */
typedef struct aplcm_sweep_spec {
    const char* claim;
    uint64_t u0_lo, u0_hi;
    uint64_t r_lo, r_hi;
    uint64_t alpha_lo, alpha_hi;
    uint64_t a_lo, a_hi;
    uint64_t beta_lo, beta_hi;
    int has_n_range;
    uint64_t n_lo, n_hi;
    uint64_t n_extra;
    unsigned workers;
} aplcm_sweep_spec;

typedef struct aplcm_records aplcm_records;

APLCM_API aplcm_status aplcm_sweep(const aplcm_sweep_spec* spec, aplcm_records** out);
APLCM_API void aplcm_records_free(aplcm_records* rs);

APLCM_API size_t aplcm_records_count(const aplcm_records* rs);
APLCM_API const char* aplcm_records_claim(const aplcm_records* rs, size_t i);
APLCM_API int aplcm_records_holds(const aplcm_records* rs, size_t i);

/* Value of "u0", "r", "n", "alpha", "a" or "beta"; NULL when the claim
 * does not consume that parameter. */
APLCM_API const char* aplcm_records_param(const aplcm_records* rs, size_t i, const char* name);

/* Named exact quantities of the checked inequality, in a fixed order. */
APLCM_API size_t aplcm_records_witness_count(const aplcm_records* rs, size_t i);
APLCM_API const char* aplcm_records_witness_name(const aplcm_records* rs, size_t i, size_t j);
APLCM_API const char* aplcm_records_witness_value(const aplcm_records* rs, size_t i, size_t j);

/* ---- boundary search at n = r^alpha ------------------------------ */

typedef struct aplcm_search aplcm_search;

/* Tight pairs (2*alpha*r >= r^alpha + 1) for alpha in [2, alpha_max],
 * r in [2, r_max], then all strict violations L_n < u0*r^alpha*(r+1)^n
 * with n = r^alpha, u0 < n, gcd(u0, r) = 1 for each pair. */
APLCM_API aplcm_status aplcm_search_run(uint64_t alpha_max, uint64_t r_max, unsigned workers,
                                        aplcm_search** out);
APLCM_API void aplcm_search_free(aplcm_search* s);

APLCM_API size_t aplcm_search_tight_pair_count(const aplcm_search* s);
APLCM_API aplcm_status aplcm_search_tight_pair(const aplcm_search* s, size_t i, uint64_t* alpha,
                                               uint64_t* r);
APLCM_API size_t aplcm_search_counterexample_count(const aplcm_search* s);
/* field: "u0", "r", "alpha", "n", "l_n", "bound". */
APLCM_API const char* aplcm_search_counterexample_field(const aplcm_search* s, size_t i,
                                                        const char* field);

/* One point, hypotheses checked but not required: computes L_n and the
 * HONG_YANG-shaped bound, reports whether L_n < bound and whether
 * gcd(u0, r) = 1. u0, r as decimal strings. */
APLCM_API aplcm_status aplcm_probe(const char* u0, const char* r, uint64_t alpha, uint64_t n,
                                   char** out_lcm, char** out_bound, int* out_violates,
                                   int* out_coprime);

/* ---- growth scan -------------------------------------------------- */

/*
 * One row per n in [1, n_max] comparing L_n against the HONG_YANG(alpha)
 * and MAIN(alpha, a) bounds. Columns:
 *   n, lcm_bits, hy_bound_bits, main_bound_bits  exact bit lengths
 *   hy_hyp, main_hyp                             hypothesis flags
 *   verdict                                      exact L_n >= MAIN bound
 * Cells are decimal strings; flags are "true"/"false". Needs a >= 2,
 * alpha >= a, r >= a.
 */
typedef struct aplcm_scan aplcm_scan;

APLCM_API aplcm_status aplcm_scan_run(const aplcm_progression* p, uint64_t alpha, uint64_t a,
                                      uint64_t n_max, aplcm_scan** out);
APLCM_API void aplcm_scan_free(aplcm_scan* s);

APLCM_API size_t aplcm_scan_column_count(void);
APLCM_API const char* aplcm_scan_column_name(size_t col);
APLCM_API size_t aplcm_scan_row_count(const aplcm_scan* s);
APLCM_API const char* aplcm_scan_cell(const aplcm_scan* s, size_t row, size_t col);

#ifdef __cplusplus
}
#endif

#endif /* APLCM_H */
