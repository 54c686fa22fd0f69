#ifndef CONNLAP_H
#define CONNLAP_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Status codes returned by every fallible function.
 */
typedef enum ClStatus {
  CL_STATUS_OK = 0,
  CL_STATUS_NULL_POINTER = 1,
  CL_STATUS_INVALID_ARGUMENT = 2,
  CL_STATUS_PARSE = 3,
  CL_STATUS_TOO_LARGE = 4,
  CL_STATUS_OVERFLOW = 5,
  CL_STATUS_BUFFER_TOO_SMALL = 6,
  CL_STATUS_INTERNAL = 7,
  CL_STATUS_PANIC = 8,
} ClStatus;

/*
 Opaque simplicial complex.
 */
typedef struct ClComplex ClComplex;

/*
 Opaque integer matrix.
 */
typedef struct ClMatrix ClMatrix;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message for the last failed call on this thread, or null. The pointer
 stays valid until the next failing call on the same thread.
 */
const char *cl_last_error(void);

/*
 Library version as a static string.
 */
const char *cl_version(void);

/*
 Parses a facet file (UTF-8, one comma-separated set per line) into a new
 complex.

 # Safety
 `text` must be a nul-terminated string and `out` a valid pointer.
 */
enum ClStatus cl_complex_from_facet_text(const char *text, struct ClComplex **out);

/*
 Builds the complex generated by integer-labelled sets. `vertices` holds
 the sets back to back; `set_sizes[k]` is the length of set `k`.

 # Safety
 `vertices` must hold the sum of `set_sizes` entries, `set_sizes` must
 hold `n_sets` entries and `out` must be valid.
 */
enum ClStatus cl_complex_from_sets(const int64_t *vertices,
                                   const size_t *set_sizes,
                                   size_t n_sets,
                                   struct ClComplex **out);

/*
 Releases a complex. Null is ignored.

 # Safety
 `c` must come from this library and not be used afterwards.
 */
void cl_complex_free(struct ClComplex *c);

/*
 Number of simplices.

 # Safety
 Pointers must be valid.
 */
enum ClStatus cl_complex_len(const struct ClComplex *c, size_t *out);

/*
 Copies the f-vector into `buf`. `out_len` receives its length; if `cap`
 is too small nothing is copied and `BufferTooSmall` is returned.

 # Safety
 `buf` must hold `cap` entries; other pointers must be valid.
 */
enum ClStatus cl_complex_f_vector(const struct ClComplex *c,
                                  uint64_t *buf,
                                  size_t cap,
                                  size_t *out_len);

/*
 Euler characteristic.

 # Safety
 Pointers must be valid.
 */
enum ClStatus cl_complex_euler(const struct ClComplex *c, int64_t *out);

/*
 Fermi characteristic, the product of `(-1)^dim` over all simplices.

 # Safety
 Pointers must be valid.
 */
enum ClStatus cl_complex_fermi(const struct ClComplex *c, int64_t *out);

/*
 Exact determinant of the connection Laplacian.

 # Safety
 Pointers must be valid.
 */
enum ClStatus cl_connection_determinant(const struct ClComplex *c, int64_t *out);

/*
 Sum of all entries of the inverse connection Laplacian.

 # Safety
 Pointers must be valid.
 */
enum ClStatus cl_total_energy(const struct ClComplex *c, int64_t *out);

/*
 Counts of positive, negative and zero eigenvalues of the connection
 Laplacian.

 # Safety
 Pointers must be valid.
 */
enum ClStatus cl_inertia(const struct ClComplex *c,
                         size_t *positive,
                         size_t *negative,
                         size_t *zero);

/*
 The connection Laplacian, rows in canonical simplex order.

 # Safety
 Pointers must be valid.
 */
enum ClStatus cl_connection_matrix(const struct ClComplex *c, struct ClMatrix **out);

/*
 The exact inverse of the connection Laplacian. Fails on the empty
 complex.

 # Safety
 Pointers must be valid.
 */
enum ClStatus cl_green_matrix(const struct ClComplex *c, struct ClMatrix **out);

/*
 Number of rows, or 0 for a null handle.

 # Safety
 `m` must be null or a live matrix handle.
 */
size_t cl_matrix_rows(const struct ClMatrix *m);

/*
 Number of columns, or 0 for a null handle.

 # Safety
 `m` must be null or a live matrix handle.
 */
size_t cl_matrix_cols(const struct ClMatrix *m);

/*
 Entry `(i, j)`.

 # Safety
 Pointers must be valid.
 */
enum ClStatus cl_matrix_get(const struct ClMatrix *m, size_t i, size_t j, int64_t *out);

/*
 Releases a matrix. Null is ignored.

 # Safety
 `m` must come from this library and not be used afterwards.
 */
void cl_matrix_free(struct ClMatrix *m);

/*
 The full report as JSON, refusing complexes with more than `max_n`
 simplices. Release the string with [`cl_string_free`].

 # Safety
 Pointers must be valid.
 */
enum ClStatus cl_report_json(const struct ClComplex *c, size_t max_n, char **out);

/*
 Releases a string returned by this library. Null is ignored.

 # Safety
 `s` must come from this library and not be used afterwards.
 */
void cl_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CONNLAP_H */
