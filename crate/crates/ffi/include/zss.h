#ifndef ZSS_H
#define ZSS_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Split variant reported by `zss_matrix_classify`.
 */
typedef enum ZssSplitVariant {
  ZSS_SPLIT_VARIANT_NON_SPLIT = 0,
  ZSS_SPLIT_VARIANT_IDENTITY = 1,
  ZSS_SPLIT_VARIANT_NEGATION = 2,
  ZSS_SPLIT_VARIANT_HORIZONTAL = 3,
  ZSS_SPLIT_VARIANT_VERTICAL = 4,
} ZssSplitVariant;

/**
 * Result codes returned by every fallible function.
 */
typedef enum ZssStatus {
  ZSS_STATUS_OK = 0,
  ZSS_STATUS_NULL_POINTER = 1,
  ZSS_STATUS_INVALID_UTF8 = 2,
  ZSS_STATUS_PARSE_ERROR = 3,
  ZSS_STATUS_INVALID_ARGUMENT = 4,
  ZSS_STATUS_TOO_LARGE = 5,
  ZSS_STATUS_INTERNAL = 6,
} ZssStatus;

/**
 * Opaque matrix handle.
 */
typedef struct ZssMatrix ZssMatrix;

/**
 * Summary of a counting enumeration.
 */
typedef struct ZssCountReport {
  uint64_t total;
  uint64_t split;
  uint64_t exceptional;
} ZssCountReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses the text format (`"<rows> <cols>\n"` then one `+`/`-` line per row).
 * On a parse error the 1-based line and column are written to `err_line` and
 * `err_column` when those are non-null.
 */
enum ZssStatus zss_matrix_parse(const char *text,
                                struct ZssMatrix **out,
                                size_t *err_line,
                                size_t *err_column);

/**
 * Builds the `rows x cols` t-split matrix.
 */
enum ZssStatus zss_matrix_t_split(size_t rows, size_t cols, int64_t t, struct ZssMatrix **out);

/**
 * Canonical representative of the symmetry class of `m`, as a new handle.
 */
enum ZssStatus zss_matrix_canonical(const struct ZssMatrix *m, struct ZssMatrix **out);

/**
 * Releases a handle. Null is ignored.
 */
void zss_matrix_free(struct ZssMatrix *m);

/**
 * Row count, or 0 for a null handle.
 */
size_t zss_matrix_rows(const struct ZssMatrix *m);

/**
 * Column count, or 0 for a null handle.
 */
size_t zss_matrix_cols(const struct ZssMatrix *m);

/**
 * Entry at 1-based `(i, j)` as -1 or +1.
 */
enum ZssStatus zss_matrix_get(const struct ZssMatrix *m, size_t i, size_t j, int32_t *out);

/**
 * Sum of all entries.
 */
enum ZssStatus zss_matrix_discrepancy(const struct ZssMatrix *m, int64_t *out);

/**
 * Writes whether `m` has no zero-sum square. If it has one and `witness` is
 * non-null, the square's `(i, j, s)` is written to `witness[0..3]`.
 */
enum ZssStatus zss_matrix_is_zssf(const struct ZssMatrix *m, bool *out, size_t *witness);

/**
 * Split classification. `t_out` is left untouched for non-split matrices.
 */
enum ZssStatus zss_matrix_classify(const struct ZssMatrix *m,
                                   enum ZssSplitVariant *variant_out,
                                   size_t *t_out);

/**
 * Writes the text form (including the trailing newline and a NUL) into
 * `buf`. `*len` must hold the buffer capacity on entry; on return it holds
 * the required size including the NUL. Returns `InvalidArgument` when the
 * buffer is too small, which lets callers query the size with a null `buf`.
 */
enum ZssStatus zss_matrix_to_text(const struct ZssMatrix *m, char *buf, size_t *len);

/**
 * Counts zero-sum-square-free `rows x cols` matrices with `|disc| <= max_abs_disc`.
 * `jobs` of 0 means one worker.
 */
enum ZssStatus zss_count_bounded(size_t rows,
                                 size_t cols,
                                 uint64_t max_abs_disc,
                                 size_t jobs,
                                 struct ZssCountReport *out);

/**
 * Counts zero-sum-square-free `rows x cols` matrices with discrepancy exactly `disc`.
 */
enum ZssStatus zss_count_exact(size_t rows,
                               size_t cols,
                               int64_t disc,
                               size_t jobs,
                               struct ZssCountReport *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ZSS_H */
