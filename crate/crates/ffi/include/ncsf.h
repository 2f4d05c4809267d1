#ifndef NCSF_H
#define NCSF_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum NcsfStatus {
  NCSF_STATUS_OK = 0,
  NCSF_STATUS_NULL_POINTER = 1,
  NCSF_STATUS_INVALID_ARGUMENT = 2,
  NCSF_STATUS_DEGREE_BOUND = 3,
  NCSF_STATUS_OUT_OF_RANGE = 4,
  NCSF_STATUS_COMPUTATION = 5,
  NCSF_STATUS_PANIC = 6,
} NcsfStatus;

typedef enum NcsfProductBasis {
  NCSF_PRODUCT_BASIS_V = 0,
  NCSF_PRODUCT_BASIS_V_PRIME = 1,
} NcsfProductBasis;

typedef enum NcsfRelation {
  NCSF_RELATION_EQ1 = 0,
  NCSF_RELATION_EQ2 = 1,
  NCSF_RELATION_MIRROR = 2,
} NcsfRelation;

/**
 * A linear combination of compositions with integer coefficients, in
 * table order (by length, then lexicographically).
 */
typedef struct NcsfExpansion NcsfExpansion;

/**
 * A square integer matrix indexed by the compositions of `n`.
 */
typedef struct NcsfMatrix NcsfMatrix;

/**
 * A polynomial in `q` with integer coefficients.
 */
typedef struct NcsfPolynomial NcsfPolynomial;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failure on this thread; empty after a success.
 * The pointer stays valid until the next call on the same thread.
 */
const char *ncsf_last_error_message(void);

/**
 * Writes a statistic of a permutation (`sc`, `rc`, `dc`, `inv`, `invc`,
 * `octype` or `foata`) as a newly allocated string.
 *
 * # Safety
 * `perm` and `statistic` must be NUL-terminated strings; `out` must be writable.
 */
enum NcsfStatus ncsf_statistic(const char *perm, const char *statistic, char **out);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void ncsf_string_free(char *s);

/**
 * `U_I` in the fundamental basis.
 *
 * # Safety
 * `comp` must be a NUL-terminated string; `out` must be writable.
 */
enum NcsfStatus ncsf_u_basis(const char *comp, struct NcsfExpansion **out);

/**
 * `V_I` in the ribbon basis.
 *
 * # Safety
 * `comp` must be a NUL-terminated string; `out` must be writable.
 */
enum NcsfStatus ncsf_v_in_ribbon(const char *comp, struct NcsfExpansion **out);

/**
 * The product of two basis elements of `V` or `V'`, in the same basis.
 *
 * # Safety
 * `left` and `right` must be NUL-terminated strings; `out` must be writable.
 */
enum NcsfStatus ncsf_product(const char *left,
                             const char *right,
                             enum NcsfProductBasis basis,
                             struct NcsfExpansion **out);

/**
 * Number of terms.
 *
 * # Safety
 * `e` must be a live handle.
 */
enum NcsfStatus ncsf_expansion_len(const struct NcsfExpansion *e, size_t *len);

/**
 * Borrows the composition (compact form) and coefficient of term `k`.
 * Both strings live as long as the handle.
 *
 * # Safety
 * `e` must be a live handle; `index` and `coeff` must be writable.
 */
enum NcsfStatus ncsf_expansion_term(const struct NcsfExpansion *e,
                                    size_t k,
                                    const char **index,
                                    const char **coeff);

/**
 * # Safety
 * `e` must come from this library and not have been freed.
 */
void ncsf_expansion_free(struct NcsfExpansion *e);

/**
 * The transition matrix `M_n` or its inverse, rows and columns in table order.
 *
 * # Safety
 * `out` must be writable.
 */
enum NcsfStatus ncsf_transition_matrix(size_t n, bool inverse, struct NcsfMatrix **out);

/**
 * # Safety
 * `m` must be a live handle; `dim` must be writable.
 */
enum NcsfStatus ncsf_matrix_dim(const struct NcsfMatrix *m, size_t *dim);

/**
 * Borrows the label of row and column `k`.
 *
 * # Safety
 * `m` must be a live handle; `label` must be writable.
 */
enum NcsfStatus ncsf_matrix_label(const struct NcsfMatrix *m, size_t k, const char **label);

/**
 * Borrows entry `(i, j)` as a decimal string.
 *
 * # Safety
 * `m` must be a live handle; `value` must be writable.
 */
enum NcsfStatus ncsf_matrix_entry(const struct NcsfMatrix *m,
                                  size_t i,
                                  size_t j,
                                  const char **value);

/**
 * # Safety
 * `m` must come from this library and not have been freed.
 */
void ncsf_matrix_free(struct NcsfMatrix *m);

/**
 * The coefficient `c_I(q)`, or its Carlitz variant when `tilde` is set.
 *
 * # Safety
 * `comp` must be a NUL-terminated string; `out` must be writable.
 */
enum NcsfStatus ncsf_qcoeff(const char *comp, bool tilde, struct NcsfPolynomial **out);

/**
 * Number of stored coefficients, one more than the degree (0 for the zero polynomial).
 *
 * # Safety
 * `p` must be a live handle; `len` must be writable.
 */
enum NcsfStatus ncsf_polynomial_len(const struct NcsfPolynomial *p, size_t *len);

/**
 * Borrows the coefficient of `q^e`.
 *
 * # Safety
 * `p` must be a live handle; `coeff` must be writable.
 */
enum NcsfStatus ncsf_polynomial_coeff(const struct NcsfPolynomial *p, size_t e, const char **coeff);

/**
 * Borrows the polynomial written with descending powers.
 *
 * # Safety
 * `p` must be a live handle.
 */
const char *ncsf_polynomial_text(const struct NcsfPolynomial *p);

/**
 * # Safety
 * `p` must come from this library and not have been freed.
 */
void ncsf_polynomial_free(struct NcsfPolynomial *p);

/**
 * Number of classes of `S_n` under a relation, by chain enumeration.
 *
 * # Safety
 * `count` must be writable.
 */
enum NcsfStatus ncsf_class_count(size_t n, enum NcsfRelation relation, uint64_t *count);

/**
 * The insertion symbols of a permutation, as a newly allocated string
 * holding the two trees on separate lines.
 *
 * # Safety
 * `perm` must be a NUL-terminated string; `out` must be writable.
 */
enum NcsfStatus ncsf_insert(const char *perm, enum NcsfRelation relation, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NCSF_H */
