/* C interface to the flattened-partition counting library.
 *
 * Conventions:
 *   - Every function returning fp_status sets the thread-local message
 *     retrievable with fp_last_error() on failure.
 *   - Output strings are heap-allocated; release them with fp_string_free().
 *   - Counts are returned as decimal strings (they outgrow 64 bits).
 *   - Patterns are the words "123".."321"; partitions use the block grammar
 *     "1,3,6/2,7,9/4/5,8" (the compact digit form "136-279-4-58" is accepted
 *     on input for n <= 9).
 */
#ifndef FLATPART_H
#define FLATPART_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  FP_OK = 0,
  FP_ERROR_DOMAIN = 1,  /* input violates a documented precondition */
  FP_ERROR_PARSE = 2,   /* malformed textual input */
  FP_ERROR_INTERNAL = 3 /* invariant breach inside the library */
} fp_status;

/* Message describing the most recent failure on this thread. */
const char* fp_last_error(void);

void fp_string_free(char* s);

/* --- exact counting ----------------------------------------------------- */

/* Brute-force |U(n; pattern)|; jobs > 1 enables parallel sub-range counts. */
fp_status fp_count_avoiders(unsigned n, const char* pattern, unsigned jobs,
                            char** out);

/* Closed-form |U(n; pattern)|. */
fp_status fp_count_formula(unsigned n, const char* pattern, char** out);

/* Brute-force refined count; refinement is "m-size" or "first-block". */
fp_status fp_count_refined(unsigned n, unsigned k, const char* pattern,
                           const char* refinement, char** out);

/* binom(n-1,k) 2^k C_{(n-1-k)/2} for 231, binom(n-1,k) 2^k R_{n-1-k} for 321. */
fp_status fp_refined_formula(unsigned n, unsigned k, const char* pattern,
                             char** out);

/* u(n, k) from the 213/312 first-block recurrence. */
fp_status fp_u_value(unsigned n, unsigned k, char** out);

/* --- identity / property checks ----------------------------------------- */

/* identity: "touchard", "identity5", "u-closed-form" or "chain-inclusion";
 * *holds receives 1 or 0. */
fp_status fp_verify_at(const char* identity, unsigned n, int* holds);

/* --- partition helpers --------------------------------------------------- */

fp_status fp_flatten(const char* partition, char** out);
fp_status fp_statistic_m(const char* partition, char** out); /* "{2,6,8}" */

/* --- bijections ---------------------------------------------------------- */

/* which: "cseq-to-partition", "partition-to-cseq", "kl-decompose",
 * "kl-compose", "u321-to-dyck", "dyck-to-u321", "cseq-to-dyck",
 * "dyck-to-cseq". `pattern` supplies the 231/321 context for the KL maps
 * (may be NULL elsewhere). */
fp_status fp_bijection(const char* which, const char* pattern,
                       const char* input, char** out);

/* --- enumeration stream -------------------------------------------------- */

typedef struct fp_enum fp_enum;

/* Stream of partitions of [n] in standard increasing form; pattern_or_null
 * restricts the stream to avoiders. NULL on error (see fp_last_error). */
fp_enum* fp_enum_new(unsigned n, const char* pattern_or_null);

/* *out receives the next partition, or NULL when the stream is exhausted. */
fp_status fp_enum_next(fp_enum* e, char** out);

void fp_enum_free(fp_enum* e);

#ifdef __cplusplus
}
#endif

#endif /* FLATPART_H */
