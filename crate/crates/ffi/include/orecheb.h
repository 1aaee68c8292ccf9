#ifndef ORECHEB_H
#define ORECHEB_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes.
typedef enum OrechebStatus {
  ORECHEB_STATUS_OK = 0,
  ORECHEB_STATUS_NULL_ARGUMENT = 1,
  ORECHEB_STATUS_INVALID_UTF8 = 2,
  ORECHEB_STATUS_PARSE = 3,
  ORECHEB_STATUS_UNKNOWN_ALGORITHM = 4,
  ORECHEB_STATUS_UNKNOWN_FUNCTION = 5,
  // The input violates a precondition (zero operator, singular leading
  // coefficient, bad sizes, ...).
  ORECHEB_STATUS_MATH = 6,
  // `orecheb_verify` ran but the residual exceeded the tolerance.
  ORECHEB_STATUS_VERIFY_FAILED = 7,
  ORECHEB_STATUS_INTERNAL = 8,
  ORECHEB_STATUS_PANIC = 9,
} OrechebStatus;

// A computed recurrence.
typedef struct OrechebRecurrence OrechebRecurrence;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Computes the recurrence of the operator `op` (e.g. `"Dx - 1"`) with
// `algo` (`"lewanowicz"`, `"paszkowski"`, `"rebillard"` or `"dac"`).
// With `reduce`, the common left factor with the denominator is removed.
//
// # Safety
// `op` and `algo` must be NUL-terminated strings; `out` must be writable.
enum OrechebStatus orecheb_recurrence_compute(const char *op,
                                              const char *algo,
                                              bool reduce,
                                              struct OrechebRecurrence **out);

// Releases a handle. Null is ignored.
//
// # Safety
// `rec` must come from `orecheb_recurrence_compute` and not be used again.
void orecheb_recurrence_free(struct OrechebRecurrence *rec);

// Order of the recurrence, or `(size_t)-1` for a null handle.
//
// # Safety
// `rec` must be null or a live handle.
size_t orecheb_recurrence_order(const struct OrechebRecurrence *rec);

// Writes the JSON document for `rec` to `*out`.
//
// # Safety
// `rec` must be a live handle; `out` must be writable.
enum OrechebStatus orecheb_recurrence_to_json(const struct OrechebRecurrence *rec,
                                              bool centered,
                                              char **out);

// Writes the human-readable report for `rec` to `*out`.
//
// # Safety
// `rec` must be a live handle; `out` must be writable.
enum OrechebStatus orecheb_recurrence_to_text(const struct OrechebRecurrence *rec,
                                              bool centered,
                                              char **out);

// Checks the recurrence computed by `algo` for the catalog function
// `function` on its first `n + 1` Chebyshev coefficients. Writes the
// largest scaled residual to `*residual` when non-null. Returns
// `ORECHEB_STATUS_VERIFY_FAILED` if it exceeds `tol`.
//
// # Safety
// `function` and `algo` must be NUL-terminated strings; `residual` must be
// null or writable.
enum OrechebStatus orecheb_verify(const char *function,
                                  const char *algo,
                                  size_t n,
                                  double tol,
                                  double *residual);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not be used again.
void orecheb_string_free(char *s);

// Message for the last failed call on this thread, or null. Valid until
// the next call into the library on the same thread.
const char *orecheb_last_error_message(void);

// Library version as a static string.
const char *orecheb_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ORECHEB_H */
