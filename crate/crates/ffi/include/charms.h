#ifndef CHARMS_H
#define CHARMS_H

/* Generated by cbindgen from charms-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum CharmsStatus {
  /**
   * Success.
   */
  CHARMS_STATUS_OK = 0,
  /**
   * A required pointer was null.
   */
  CHARMS_STATUS_NULL_ARGUMENT = 1,
  /**
   * The inputs violate a documented precondition.
   */
  CHARMS_STATUS_INVALID_INPUT = 2,
  /**
   * The provided buffer cannot hold the result.
   */
  CHARMS_STATUS_BUFFER_TOO_SMALL = 3,
  /**
   * An index was past the end of a collection.
   */
  CHARMS_STATUS_OUT_OF_RANGE = 4,
  /**
   * The library panicked; the call had no effect.
   */
  CHARMS_STATUS_PANIC = 5,
} CharmsStatus;

/**
 * Opaque supplementary difference set handle.
 */
typedef struct CharmsSds CharmsSds;

/**
 * Opaque report handle returned by [`charms_search_run`].
 */
typedef struct CharmsSearchReport CharmsSearchReport;

/**
 * Visitor for [`charms_generate`]. Returning nonzero stops the
 * enumeration early.
 */
typedef int (*CharmsVisitor)(const uint8_t *symbols, size_t len, void *ctx);

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Writes the number of charm-bracelet classes of length `n` over `k`
 * symbols as a NUL-terminated decimal string.
 *
 * # Safety
 * `buf` must point to `buf_len` writable bytes.
 */
enum CharmsStatus charms_count_charm_bracelets(size_t n, size_t k, char *buf, size_t buf_len);

/**
 * Enumerates class representatives of length `n` over `k` symbols.
 * `kind` selects the action: 0 rotation, 1 rotation with reversal,
 * 2 affine index maps. A null `visitor` just counts; a null `emitted`
 * discards the count.
 *
 * # Safety
 * `visitor`, when provided, must be callable with `ctx`.
 */
enum CharmsStatus charms_generate(size_t n,
                                  size_t k,
                                  int kind,
                                  CharmsVisitor visitor,
                                  void *ctx,
                                  uint64_t *emitted);

/**
 * Writes the periodic autocorrelation of `entries` into `out`.
 *
 * # Safety
 * `entries` and `out` must each cover `len` elements.
 */
enum CharmsStatus charms_paf(const int64_t *entries, size_t len, int64_t *out);

/**
 * Writes the power spectral density of `entries` into `out`.
 *
 * # Safety
 * `entries` and `out` must each cover `len` elements.
 */
enum CharmsStatus charms_psd(const int64_t *entries, size_t len, double *out);

/**
 * Writes the `m`-compression of `entries` into `out`, which must cover
 * `len / m` elements. `m` must divide `len`.
 *
 * # Safety
 * `entries` covers `len` elements and `out` covers `len / m`.
 */
enum CharmsStatus charms_compress(const int64_t *entries, size_t len, size_t m, int64_t *out);

/**
 * Tests whether `a`, `b` form an aperiodic Golay pair.
 *
 * # Safety
 * `a` and `b` cover `len` elements; `out` is writable.
 */
enum CharmsStatus charms_is_golay_pair(const int64_t *a, const int64_t *b, size_t len, bool *out);

/**
 * Tests whether `a`, `b` form a periodic Golay pair.
 *
 * # Safety
 * `a` and `b` cover `len` elements; `out` is writable.
 */
enum CharmsStatus charms_is_periodic_golay_pair(const int64_t *a,
                                                const int64_t *b,
                                                size_t len,
                                                bool *out);

/**
 * Whether `v` is of the form `2^a 10^b 26^c`.
 */
bool charms_is_golay_number(uint64_t v);

/**
 * Builds a supplementary difference set over `Z_v` from the residues in
 * `x` and `y`; the sizes and `lambda` must satisfy the counting identity
 * `r(r-1) + s(s-1) = lambda (v-1)`. On success `*out` owns the handle.
 *
 * # Safety
 * `x` covers `x_len` elements, `y` covers `y_len`, `out` is writable.
 */
enum CharmsStatus charms_sds_new(size_t v,
                                 const size_t *x,
                                 size_t x_len,
                                 const size_t *y,
                                 size_t y_len,
                                 size_t lambda,
                                 struct CharmsSds **out);

/**
 * Whether every nonzero residue occurs exactly `lambda` times as an
 * in-block difference.
 *
 * # Safety
 * `sds` is a live handle; `out` is writable.
 */
enum CharmsStatus charms_sds_verify(const struct CharmsSds *sds, bool *out);

/**
 * Whether the parameters satisfy `v = 2(r + s - lambda)`, the condition
 * for the derived pair to be periodic Golay.
 *
 * # Safety
 * `sds` is a live handle; `out` is writable.
 */
enum CharmsStatus charms_sds_golay_condition(const struct CharmsSds *sds, bool *out);

/**
 * Writes the +/-1 pair encoding of the blocks: entry `-1` exactly at the
 * residues of the block. `a_out` and `b_out` must each cover `v`.
 *
 * # Safety
 * `sds` is a live handle; the out buffers cover `v` elements.
 */
enum CharmsStatus charms_sds_to_pair(const struct CharmsSds *sds, int64_t *a_out, int64_t *b_out);

/**
 * Releases a handle from [`charms_sds_new`]. Null is ignored.
 *
 * # Safety
 * `sds` was returned by this library and not yet freed.
 */
void charms_sds_free(struct CharmsSds *sds);

/**
 * Tests two +/-1 pairs of common length `len` for equivalence under
 * simultaneous decimation with per-side rotation and reversal, optionally
 * extended by per-side negation and side swap.
 *
 * # Safety
 * The four sequence pointers cover `len` elements; `out` is writable.
 */
enum CharmsStatus charms_pairs_equivalent(const int64_t *a1,
                                          const int64_t *b1,
                                          const int64_t *a2,
                                          const int64_t *b2,
                                          size_t len,
                                          bool allow_negation,
                                          bool allow_swap,
                                          bool *out);

/**
 * Writes the canonical form of a +/-1 pair under the same group as
 * [`charms_pairs_equivalent`] into `a_out`, `b_out` (each `len` slots).
 *
 * # Safety
 * All pointers cover `len` elements.
 */
enum CharmsStatus charms_pair_canonical(const int64_t *a,
                                        const int64_t *b,
                                        size_t len,
                                        bool allow_negation,
                                        bool allow_swap,
                                        int64_t *a_out,
                                        int64_t *b_out);

/**
 * Runs the staged periodic Golay pair search at length `v`. `m` of 0
 * selects the default compression factor 2; a negative `psd_tolerance`
 * selects the default filter tolerance. On success `*out` owns the
 * report handle.
 *
 * # Safety
 * `out` is writable.
 */
enum CharmsStatus charms_search_run(size_t v,
                                    size_t m,
                                    double psd_tolerance,
                                    struct CharmsSearchReport **out);

/**
 * Number of distinct pairs in the report; 0 for a null handle.
 *
 * # Safety
 * `report` is a live handle or null.
 */
size_t charms_search_pair_count(const struct CharmsSearchReport *report);

/**
 * Full sequence length of the searched pairs; 0 for a null handle.
 *
 * # Safety
 * `report` is a live handle or null.
 */
size_t charms_search_pair_len(const struct CharmsSearchReport *report);

/**
 * Writes pair `index` of the report into `a_out`, `b_out`, each covering
 * [`charms_search_pair_len`] elements.
 *
 * # Safety
 * `report` is a live handle; the out buffers are large enough.
 */
enum CharmsStatus charms_search_pair(const struct CharmsSearchReport *report,
                                     size_t index,
                                     int64_t *a_out,
                                     int64_t *b_out);

/**
 * Serializes the report as JSON. Always stores the required buffer size
 * (including the NUL) in `needed` when it is non-null; writes the text
 * only when `buf` has room.
 *
 * # Safety
 * `report` is a live handle; `buf` covers `buf_len` bytes when non-null.
 */
enum CharmsStatus charms_search_report_json(const struct CharmsSearchReport *report,
                                            char *buf,
                                            size_t buf_len,
                                            size_t *needed);

/**
 * Releases a handle from [`charms_search_run`]. Null is ignored.
 *
 * # Safety
 * `report` was returned by this library and not yet freed.
 */
void charms_search_report_free(struct CharmsSearchReport *report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CHARMS_H */
