#ifndef BPFIB_H
#define BPFIB_H

/* Generated by cbindgen from the bpfib-ffi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every entry point.
 */
typedef enum BpfibStatus {
  BPFIB_OK = 0,
  BPFIB_NULL_POINTER = 1,
  BPFIB_INVALID_UTF8 = 2,
  BPFIB_PARSE_ERROR = 3,
  BPFIB_INVALID_PARAMETER = 4,
  BPFIB_DEGENERATE_PARAMETERS = 5,
  BPFIB_NOT_INVERTIBLE = 6,
  BPFIB_DIVISION_BY_ZERO = 7,
  BPFIB_INTERNAL_ERROR = 8,
} BpfibStatus;

/**
 * Selects the Fibonacci-side (`q`) or Lucas-side (`l`) family.
 */
typedef enum BpfibFamily {
  BPFIB_FAMILY_FIBONACCI = 0,
  BPFIB_FAMILY_LUCAS = 1,
} BpfibFamily;

/**
 * Opaque handle around a validated parameter pair.
 */
typedef struct BpfibParams BpfibParams;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parse `a` and `b` (rational text) into a new handle. On success writes a
 * pointer that must be released with [`bpfib_params_free`].
 *
 * # Safety
 * `a` and `b` must be NUL-terminated strings; `out` must be writable.
 */
enum BpfibStatus bpfib_params_new(const char *a, const char *b, struct BpfibParams **out);

/**
 * Release a handle created by [`bpfib_params_new`]. Null is a no-op.
 *
 * # Safety
 * `params` must be a pointer previously returned by [`bpfib_params_new`].
 */
void bpfib_params_free(struct BpfibParams *params);

/**
 * `n`-th bi-periodic Fibonacci number as rational text.
 *
 * # Safety
 * `params` must be a live handle; `out` must be writable.
 */
enum BpfibStatus bpfib_fib(const struct BpfibParams *params, int64_t n, char **out);

/**
 * `n`-th bi-periodic Lucas number as rational text.
 *
 * # Safety
 * `params` must be a live handle; `out` must be writable.
 */
enum BpfibStatus bpfib_lucas(const struct BpfibParams *params, int64_t n, char **out);

/**
 * `n`-th Fibonacci polynomial as a JSON array of rational strings in
 * ascending degree.
 *
 * # Safety
 * `params` must be a live handle; `out` must be writable.
 */
enum BpfibStatus bpfib_fib_poly_json(const struct BpfibParams *params, uint64_t n, char **out);

/**
 * Exact `q_n` through the generating matrix (fast for huge `n`), as
 * rational text.
 *
 * # Safety
 * `params` must be a live handle; `out` must be writable.
 */
enum BpfibStatus bpfib_fib_matpow(const struct BpfibParams *params, int64_t n, char **out);

/**
 * `n`-th power of a generating matrix as matrix JSON
 * (`{"e11": "...", "e12": "...", "e21": "...", "e22": "..."}`). The
 * evaluation point `x` (rational text, null for 1) applies to the
 * Fibonacci-side matrix only.
 *
 * # Safety
 * `params` must be a live handle; `x` null or NUL-terminated; `out`
 * writable.
 */
enum BpfibStatus bpfib_matrix_power_json(const struct BpfibParams *params,
                                         enum BpfibFamily family,
                                         int64_t n,
                                         const char *x,
                                         char **out);

/**
 * Hadamard power product as matrix JSON.
 *
 * # Safety
 * `params` must be a live handle; `out` must be writable.
 */
enum BpfibStatus bpfib_hadamard_json(const struct BpfibParams *params,
                                     enum BpfibFamily family,
                                     int64_t n,
                                     char **out);

/**
 * Exact spectrum of a Hadamard product as JSON
 * (`{"det", "trace", "eigenvalues", "eigenvectors", "inverse"}`).
 *
 * # Safety
 * `params` must be a live handle; `out` must be writable.
 */
enum BpfibStatus bpfib_hadamard_spectrum_json(const struct BpfibParams *params,
                                              enum BpfibFamily family,
                                              int64_t n,
                                              char **out);

/**
 * Exact Binet evaluation at `x` (rational text, null for 1), as rational
 * text.
 *
 * # Safety
 * `params` must be a live handle; `x` null or NUL-terminated; `out`
 * writable.
 */
enum BpfibStatus bpfib_binet(const struct BpfibParams *params,
                             int64_t n,
                             const char *x,
                             char **out);

/**
 * Double-precision Binet evaluation; overflow surfaces as ±infinity.
 *
 * # Safety
 * `params` must be a live handle; `x` null or NUL-terminated; `out`
 * writable.
 */
enum BpfibStatus bpfib_binet_float(const struct BpfibParams *params,
                                   int64_t n,
                                   const char *x,
                                   double *out);

/**
 * Run the identity audit. `grid_json` is a grid in the documented schema
 * (null for the default grid); `suites` is a comma-separated list or `all`
 * (null for `all`). Writes the JSON array of reports; corrections in the
 * findings do not change the status code (inspect the report).
 *
 * # Safety
 * Pointer arguments must be null or NUL-terminated strings; `out` must be
 * writable.
 */
enum BpfibStatus bpfib_audit_json(const char *grid_json, const char *suites, char **out);

/**
 * Release a string returned through any out-pointer. Null is a no-op.
 *
 * # Safety
 * `s` must be a pointer previously written by this library.
 */
void bpfib_string_free(char *s);

/**
 * Static name for a status code (never freed by the caller).
 */
const char *bpfib_status_name(enum BpfibStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BPFIB_H */
