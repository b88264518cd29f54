#ifndef DPDP_H
#define DPDP_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every entry point.
 */
typedef enum DpdpStatus {
  DPDP_STATUS_OK = 0,
  DPDP_STATUS_NULL_POINTER = 1,
  DPDP_STATUS_INVALID_INPUT = 2,
  DPDP_STATUS_OUT_OF_RANGE = 3,
  DPDP_STATUS_INTERNAL = 4,
  DPDP_STATUS_PANIC = 5,
} DpdpStatus;

/**
 * Solved GAP edit-distance instance.
 */
typedef struct DpdpGap DpdpGap;

/**
 * Solved GLWS instance.
 */
typedef struct DpdpGlws DpdpGlws;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Copies the last error message on this thread into `buf` as a
 * NUL-terminated string, truncating to `len - 1` bytes. Returns the full
 * message length excluding the terminator.
 *
 * # Safety
 * `buf` must be null or point to `len` writable bytes.
 */
size_t dpdp_last_error(char *buf, size_t len);

/**
 * Solves GLWS over strictly ascending `positions` with a cost string such
 * as `quad:C=10`. `parallel` selects the cordon solver.
 *
 * # Safety
 * `positions` must point to `n` values; `cost` must be a NUL-terminated
 * string; `out` must be writable.
 */
enum DpdpStatus dpdp_glws_solve(const int64_t *positions,
                                size_t n,
                                const char *cost,
                                bool parallel,
                                struct DpdpGlws **out_handle);

/**
 * Number of states, excluding the base state 0.
 *
 * # Safety
 * `h` must be a live handle from [`dpdp_glws_solve`].
 */
enum DpdpStatus dpdp_glws_len(const struct DpdpGlws *h, size_t *n);

/**
 * Value and best decision of state `i` in `0..=n`.
 *
 * # Safety
 * `h` must be a live handle; the out pointers must be writable or null.
 */
enum DpdpStatus dpdp_glws_state(const struct DpdpGlws *h,
                                size_t i,
                                int64_t *value,
                                size_t *decision);

/**
 * Frontier rounds of a parallel solve; 0 for the sequential solver.
 *
 * # Safety
 * `h` must be a live handle; `rounds` must be writable.
 */
enum DpdpStatus dpdp_glws_rounds(const struct DpdpGlws *h, size_t *rounds);

/**
 * Releases a handle. Null is a no-op.
 *
 * # Safety
 * `h` must be null or a handle not yet freed.
 */
void dpdp_glws_free(struct DpdpGlws *h);

/**
 * Length of the longest strictly increasing subsequence.
 *
 * # Safety
 * `keys` must point to `n` values; the out pointers must be writable or null.
 */
enum DpdpStatus dpdp_lis(const int64_t *keys, size_t n, size_t *k, size_t *rounds);

/**
 * Longest common subsequence length of two byte strings.
 *
 * # Safety
 * `a` and `b` must point to `na` and `nb` bytes; the out pointers must be
 * writable or null.
 */
enum DpdpStatus dpdp_lcs(const uint8_t *a,
                         size_t na,
                         const uint8_t *b,
                         size_t nb,
                         size_t *k,
                         size_t *rounds);

/**
 * Edit distance with gap costs; `cost_a` prices deletions from `a`,
 * `cost_b` from `b`.
 *
 * # Safety
 * As for [`dpdp_lcs`]; both cost strings must be NUL-terminated.
 */
enum DpdpStatus dpdp_gap_solve(const uint8_t *a,
                               size_t na,
                               const uint8_t *b,
                               size_t nb,
                               const char *cost_a,
                               const char *cost_b,
                               struct DpdpGap **out_handle);

/**
 * Cost of aligning the first `i` symbols of `a` with the first `j` of `b`.
 *
 * # Safety
 * `h` must be a live handle; `value` must be writable.
 */
enum DpdpStatus dpdp_gap_value(const struct DpdpGap *h, size_t i, size_t j, int64_t *value);

/**
 * Full edit distance and round count.
 *
 * # Safety
 * `h` must be a live handle; the out pointers must be writable or null.
 */
enum DpdpStatus dpdp_gap_distance(const struct DpdpGap *h, int64_t *value, size_t *rounds);

/**
 * Releases a handle. Null is a no-op.
 *
 * # Safety
 * `h` must be null or a handle not yet freed.
 */
void dpdp_gap_free(struct DpdpGap *h);

/**
 * Minimum cost of covering the positions with exactly `k` segments under a
 * convex cost.
 *
 * # Safety
 * As for [`dpdp_glws_solve`]; `cost_out` must be writable.
 */
enum DpdpStatus dpdp_kglws(const int64_t *positions,
                           size_t n,
                           const char *cost,
                           size_t k,
                           int64_t *cost_out);

/**
 * Optimal binary search tree cost. With `gaps` false, `weights` holds one
 * frequency per key; with `gaps` true it holds `2n + 1` interleaved gap and
 * key weights starting and ending with a gap.
 *
 * # Safety
 * `weights` must point to `len` values; `cost_out` must be writable.
 */
enum DpdpStatus dpdp_obst(const int64_t *weights, size_t len, bool gaps, int64_t *cost_out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DPDP_H */
