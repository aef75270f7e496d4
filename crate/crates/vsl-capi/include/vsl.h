#ifndef VSL_H
#define VSL_H

/* This file is generated by cbindgen from vsl-capi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every entry point.
 */
typedef enum VslStatus {
  /**
   * success
   */
  VSL_STATUS_OK = 0,
  /**
   * bad arguments (null pointers, unknown family, malformed input)
   */
  VSL_STATUS_INVALID_ARGUMENT = 1,
  /**
   * the computation itself reported an error
   */
  VSL_STATUS_FAILED = 2,
  /**
   * a panic was caught at the boundary
   */
  VSL_STATUS_PANIC = 3,
} VslStatus;

/**
 * Verdict codes mirroring the library's verdict statuses.
 */
typedef enum VslVerdict {
  VSL_VERDICT_VERY_SIMPLE = 0,
  VSL_VERDICT_VERY_SIMPLE_MODULO_LEDGER = 1,
  VSL_VERDICT_NOT_VERY_SIMPLE = 2,
  VSL_VERDICT_UNDECIDED = 3,
} VslVerdict;

/**
 * An opaque built group together with its heart module data.
 */
typedef struct VslGroup VslGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Returns the library version as a string; free with `vsl_string_free`.
 */
char *vsl_version(void);

/**
 * Returns and clears the last error message on this thread, or NULL when
 * none is pending; free with `vsl_string_free`.
 */
char *vsl_last_error_message(void);

/**
 * Frees a string returned by this library.
 *
 * # Safety
 * `s` must be a pointer previously returned by a vsl function, not yet
 * freed, or NULL.
 */
void vsl_string_free(char *s);

/**
 * Builds a group from a family name ("sl2", "sz", "m11", "m11on12", "m12",
 * "l2_11", "symmetric", "alternating", "cyclic", "dihedral") and its
 * parameter: q for the Lie-type families, n for the series, 0 when unused.
 *
 * # Safety
 * `family` must be a NUL-terminated string and `out` a valid pointer.
 */
enum VslStatus vsl_group_build(const char *family, uint64_t q, uint64_t n, struct VslGroup **out);

/**
 * Releases a group handle.
 *
 * # Safety
 * `g` must come from `vsl_group_build` and not have been freed, or be NULL.
 */
void vsl_group_free(struct VslGroup *g);

/**
 * Number of points the group acts on.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum VslStatus vsl_group_degree(const struct VslGroup *g, uint64_t *out);

/**
 * Group order computed from the base and strong generating set.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum VslStatus vsl_group_order(const struct VslGroup *g, uint64_t *out);

/**
 * Dimension of the heart module of the action.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum VslStatus vsl_group_module_dim(const struct VslGroup *g, uint64_t *out);

/**
 * Runs the very-simplicity criterion. `use_ledger = false` drops every
 * cited fact, downgrading ledger-dependent verdicts to undecided. On
 * success writes the verdict code and, when `out_json` is non-NULL, the
 * full JSON report.
 *
 * # Safety
 * `family` must be a NUL-terminated string; `out_verdict` must be valid;
 * `out_json` may be NULL.
 */
enum VslStatus vsl_certify(const char *family,
                           uint64_t q,
                           uint64_t n,
                           bool use_ledger,
                           enum VslVerdict *out_verdict,
                           char **out_json);

/**
 * Runs the brute-force definitional oracle (module dimension at most 5).
 * Writes whether the module is very simple; optionally the JSON report.
 *
 * # Safety
 * `family` must be a NUL-terminated string; `out_very_simple` must be
 * valid; `out_json` may be NULL.
 */
enum VslStatus vsl_oracle(const char *family,
                          uint64_t q,
                          uint64_t n,
                          bool *out_very_simple,
                          char **out_json);

/**
 * Verifies the 2-torsion of y² = f(x) over F_p. `f_coeffs` lists the
 * coefficients ascending (constant term first). Writes whether every check
 * passed; optionally the JSON report.
 *
 * # Safety
 * `f_coeffs` must point to `f_len` readable u64 values; `out_all_pass`
 * must be valid; `out_json` may be NULL.
 */
enum VslStatus vsl_jac_two_torsion(uint64_t p,
                                   const uint64_t *f_coeffs,
                                   uintptr_t f_len,
                                   uintptr_t pair_cap,
                                   bool *out_all_pass,
                                   char **out_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* VSL_H */
