#pragma once

/* C interface to the skew matrix algebra library.
 *
 * Every entry point takes JSON text in and hands JSON text back. On success
 * the return value is 0 and *out_json points to a NUL-terminated buffer owned
 * by the caller; release it with skewmat_free. On failure the return value is
 * a positive error code (see skewmat_errc_name) or -1 for an internal fault,
 * *out_json is NULL and skewmat_last_error() describes the problem for the
 * calling thread. Outputs are deterministic for identical inputs and seeds.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Library version string, statically allocated. */
const char* skewmat_version(void);

/* Stable name of an error code returned by the functions below. */
const char* skewmat_errc_name(int code);

/* Message of the last failing call on this thread; empty after a success. */
const char* skewmat_last_error(void);

/* Releases a buffer returned through an out_json parameter. */
void skewmat_free(char* buf);

/* Lenient reducedness check of a skew-set document. Output: {"ok", "violations"}.
 * Structural problems (bad shape, unknown field) fail instead of reporting. */
int skewmat_validate(const char* skewset_json, char** out_json);

/* Structure report for a skew set: simplicity with witness, ideal lattice
 * (cap_ideals bounds the enumeration; 0 refuses large instances), nuclei,
 * associativity and center. */
int skewmat_analyze(const char* skewset_json, size_t cap_ideals, char** out_json);

/* Decides diagonal-scaling equivalence of two skew sets over the same field.
 * Output: {"equivalent", "reason", "detail", "gamma"?, "verified"?}. */
int skewmat_equivalent(const char* a_json, const char* b_json, char** out_json);

/* Tensor product of two skew sets over the same field; output is a skew set. */
int skewmat_tensor(const char* a_json, const char* b_json, char** out_json);

/* Randomized invariant battery. Options: {"n", "field", "density", "count",
 * "seed"}, all optional except "field" defaulting to the rationals. */
int skewmat_fuzz(const char* options_json, char** out_json);

/* Golden worked-example suite. only_id restricts to one case (NULL or ""
 * runs everything). Output: {"pass", "cases", "failing"}. */
int skewmat_paper_suite(const char* only_id, char** out_json);

/* JSON array of the worked-example case ids. */
int skewmat_paper_case_ids(char** out_json);

/* Splits a unital algebra with a distinguished etale subalgebra into a skew
 * set over the splitting field. Input: {"algebra"| "skewset", "k_basis", "u",
 * "e", "roots", "v"?}. Output: {"cprime", "v_used", "transition"}. */
int skewmat_split(const char* input_json, unsigned long long seed, char** out_json);

/* Galois descent of a skew set along an index permutation. Input:
 * {"skewset", "perm"}. Output: the fixed-point algebra over the prime field
 * with its distinguished diagonal. */
int skewmat_descend(const char* datum_json, unsigned long long seed, char** out_json);

/* Builds an algebra over GF(p) whose nucleus has a prescribed semisimple
 * quotient. Input: {"p", "targets": [{"m", "d"}...]}. */
int skewmat_realize_sigma(const char* request_json, unsigned long long seed, char** out_json);

#ifdef __cplusplus
}
#endif
