/* C interface to the D(S_n) Frobenius-Schur indicator engine. */

#ifndef FSIND_H
#define FSIND_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible entry point.
 */
typedef enum FsindStatus {
  FsindOk = 0,
  /**
   * a pointer argument was null
   */
  FsindNullArgument = 1,
  /**
   * n outside 3..=8 (larger degrees need the chunked CLI path)
   */
  FsindBadDegree = 2,
  /**
   * row or column index out of range
   */
  FsindOutOfRange = 3,
  /**
   * internal computation failed
   */
  FsindComputeFailed = 4,
} FsindStatus;

/**
 * Opaque handle to a computed indicator table.
 */
typedef struct FsindMatrix FsindMatrix;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Computes the full indicator table of `D(S_n)` and returns a handle
 * through `out`. The handle must be released with `fsind_matrix_free`.
 */
enum FsindStatus fsind_matrix_compute(size_t n, struct FsindMatrix **out);

/**
 * Releases a handle returned by `fsind_matrix_compute`. Null is ignored.
 */
void fsind_matrix_free(struct FsindMatrix *handle);

/**
 * Number of induced characters (rows) in the table.
 */
size_t fsind_matrix_row_count(const struct FsindMatrix *handle);

/**
 * Number of divisors of exp(S_n) (columns) in the table.
 */
size_t fsind_matrix_divisor_count(const struct FsindMatrix *handle);

/**
 * The divisor heading column `col`.
 */
enum FsindStatus fsind_matrix_divisor(const struct FsindMatrix *handle, size_t col, uint64_t *out);

/**
 * The 1-based label `(i, j)` of table row `row`: `i` names the conjugacy
 * class of the inducing centralizer, `j` the character of that
 * centralizer.
 */
enum FsindStatus fsind_matrix_label(const struct FsindMatrix *handle,
                                    size_t row,
                                    size_t *out_i,
                                    size_t *out_j);

/**
 * The indicator value at (`row`, `col`).
 */
enum FsindStatus fsind_matrix_value(const struct FsindMatrix *handle,
                                    size_t row,
                                    size_t col,
                                    int64_t *out);

/**
 * Number of I-equivalence classes (characters grouped by identical
 * indicator rows).
 */
size_t fsind_matrix_class_count(const struct FsindMatrix *handle);

/**
 * Number of unexpectedly vanishing (class, m) incidences.
 */
size_t fsind_matrix_unexpected_zero_total(const struct FsindMatrix *handle);

/**
 * Writes the CSV report into `buf` (at most `len` bytes including the
 * trailing NUL) and returns the full length through `written`. Call with
 * `buf = NULL` to query the required size.
 */
enum FsindStatus fsind_matrix_csv(const struct FsindMatrix *handle,
                                  char *buf,
                                  size_t len,
                                  size_t *written);

/**
 * Library version as a static NUL-terminated string.
 */
const char *fsind_version(void);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* FSIND_H */
