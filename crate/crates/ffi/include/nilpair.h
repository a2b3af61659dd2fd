#ifndef NILPAIR_H
#define NILPAIR_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call. Zero is success.
 */
typedef enum NpStatus {
  NP_STATUS_OK = 0,
  NP_STATUS_PARSE = 1,
  NP_STATUS_SHAPE = 2,
  NP_STATUS_CLASSIFICATION = 3,
  NP_STATUS_STABILITY = 4,
  NP_STATUS_HYPOTHESIS = 5,
  NP_STATUS_REGULARITY = 6,
  NP_STATUS_BOUND = 7,
  NP_STATUS_RESOURCE = 8,
  NP_STATUS_FORM = 9,
  NP_STATUS_EVENNESS = 10,
  NP_STATUS_SYMMETRY = 11,
  NP_STATUS_PRECONDITION = 12,
  NP_STATUS_INTERNAL = 13,
  NP_STATUS_NULL_POINTER = 20,
  NP_STATUS_INVALID_UTF8 = 21,
  NP_STATUS_UNKNOWN_SUITE = 22,
  NP_STATUS_PANIC = 30,
} NpStatus;

/**
 * Opaque handle to a nilpotent pair built from a diagram, together with its grading pair.
 */
typedef struct NpPair NpPair;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string. Do not free.
 */
const char *np_version(void);

/**
 * Message for the last non-OK status on this thread, or null. Valid until the next call on
 * this thread. Do not free.
 */
const char *np_last_error(void);

/**
 * Releases a string returned by this library. Null is a no-op.
 *
 * # Safety
 * `s` must be null or a string returned by this library that has not been freed.
 */
void np_string_free(char *s);

/**
 * Builds the pair for a diagram spec such as `"3,2,1"`, `"3,2/1"` or `"2+1"`.
 *
 * # Safety
 * `spec` must be a NUL-terminated string; `out` must be valid for one pointer write.
 */
enum NpStatus np_pair_new(const char *spec, struct NpPair **out);

/**
 * Releases a pair handle. Null is a no-op.
 *
 * # Safety
 * `p` must be null or a handle from [`np_pair_new`] that has not been freed.
 */
void np_pair_free(struct NpPair *p);

/**
 * Matrix size n of the pair (the number of boxes).
 *
 * # Safety
 * `p` must be a live handle; `out` must be valid for one write.
 */
enum NpStatus np_pair_size(const struct NpPair *p, size_t *out);

/**
 * Dimension of the centralizer of the pair in sl_n.
 *
 * # Safety
 * `p` must be a live handle; `out` must be valid for one write.
 */
enum NpStatus np_pair_centralizer_dim(const struct NpPair *p, size_t *out);

/**
 * The pair (e₁, e₂, h₁, h₂) as JSON.
 *
 * # Safety
 * `p` must be a live handle; `out` must be valid for one pointer write.
 */
enum NpStatus np_pair_json(const struct NpPair *p, char **out);

/**
 * Classification (principal, distinguished, ...) as JSON.
 *
 * # Safety
 * `p` must be a live handle; `out` must be valid for one pointer write.
 */
enum NpStatus np_pair_classify_json(const struct NpPair *p, char **out);

/**
 * Bi-exponents as a JSON list of [p, q]. Fails with `NP_STATUS_CLASSIFICATION` unless the
 * pair is principal.
 *
 * # Safety
 * `p` must be a live handle; `out` must be valid for one pointer write.
 */
enum NpStatus np_pair_biexponents_json(const struct NpPair *p, char **out);

/**
 * Rectangular verdict and sl₂×sl₂ decomposition of g for a spec such as `"so:3x1,1x3"`.
 *
 * # Safety
 * `spec` must be a NUL-terminated string; `out` must be valid for one pointer write.
 */
enum NpStatus np_rect_json(const char *spec, char **out);

/**
 * Runs a verification suite and returns its report as pretty JSON.
 *
 * `suite` is one of structure, skew, cohomology, multiplicity, harmonics, rectangular,
 * strictness. `bound` is the diagram size (or the dimension bound for rectangular); it is
 * ignored by multiplicity and strictness. `passed` (optional) receives 1 when every counted
 * check passed.
 *
 * # Safety
 * `suite` must be a NUL-terminated string; `out` must be valid for one pointer write;
 * `passed` must be null or valid for one write.
 */
enum NpStatus np_verify_json(const char *suite, size_t bound, char **out, int32_t *passed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NILPAIR_H */
