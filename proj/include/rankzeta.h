#ifndef RANKZETA_H
#define RANKZETA_H

/* C interface to the rank-n zeta engine.
 *
 * All functions return an rz_* status code. On failure a thread-local
 * message is available via rz_error_message(). Strings returned through
 * char** out-parameters are heap-allocated JSON or CSV documents; release
 * them with rz_string_free(). Handles are opaque and must be released
 * with rz_curve_free().
 *
 * Exact rational values are serialized as strings "num/den" (denominator
 * elided when 1); exact integers as decimal strings.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#define RZ_OK 0
#define RZ_ERR_INVALID_ARGUMENT 1
#define RZ_ERR_LENGTH_MISMATCH 2
#define RZ_ERR_NON_INTEGRAL_COEFFICIENT 3
#define RZ_ERR_UNSUPPORTED_GENUS 4
#define RZ_ERR_POLE_EVALUATION 5
#define RZ_ERR_NON_INTEGRAL_EXPONENT 6
#define RZ_ERR_PARSE 7
#define RZ_ERR_INTERNAL 8

typedef struct rz_curve rz_curve;

/* Last error message for the calling thread; empty string if none. */
const char* rz_error_message(void);

void rz_string_free(char* s);
void rz_curve_free(rz_curve* c);

/* Curve construction. JSON schema:
 *   {"q": int, "genus": int, "point_counts": [int,...]}
 * or
 *   {"q": int, "genus": int, "artin_coeffs": [int,...]}
 * Exactly one of point_counts / artin_coeffs must be present.
 */
int rz_curve_from_json(const char* json, rz_curve** out);
int rz_curve_from_point_counts(long long q, int genus,
                               const long long* counts, size_t len,
                               rz_curve** out);
int rz_curve_from_coeffs(long long q, int genus,
                         const long long* coeffs, size_t len,
                         rz_curve** out);

/* Coefficients, point counts N_1..N_2g, and the validation report
 * (coefficient symmetry, point-count bounds, numeric root-norm check at
 * max(64, precision_digits) decimal digits). precision_digits <= 0 means
 * the default of 64.
 */
int rz_artin_report(const rz_curve* c, int precision_digits, char** json_out);

/* 1 if every validation check passes, else 0. */
int rz_validation_ok(const rz_curve* c, int precision_digits, int* ok_out);

/* Invariant table rows n = 1..n_max: v_hat, beta_hat_zero, beta_zero,
 * alpha_zero, and (genus 2 only) alpha_n_n. decimal_digits > 0 adds
 * rounded decimal renditions.
 */
int rz_invariants_report(const rz_curve* c, int n_max, int decimal_digits,
                         char** json_out);

/* Normalized zeta polynomial for one rank:
 *   {"n": int, "Q": "int", "alpha0": "num/den", "coeffs": ["num/den",...],
 *    "beta_zero": ..., "functional_equation": bool, "residues": bool}
 */
int rz_zeta_poly_report(const rz_curve* c, int n, int decimal_digits,
                        char** json_out);

/* Riemann-hypothesis reports for ranks n_lo..n_hi. Each row carries the
 * exact verdict (holds_strict / holds_boundary / fails_real_root_off_line /
 * fails_complex_pairing), the quadratic split for genus 2, exact margin
 * comparisons, and numeric reciprocal-root norms at precision_digits.
 */
int rz_rh_report(const rz_curve* c, int n_lo, int n_hi, int precision_digits,
                 char** json_out);

/* Residual convergence table for n = 1..n_max (genus 2 only).
 * CSV columns: n,r_a,r_b,r_beta,r_alpha,r_c,status. Exact columns are
 * "num/den"; r_c is decimal at precision_digits significant digits.
 * decimal_digits > 0 appends decimal columns for the exact residuals.
 */
int rz_asymptotics_csv(const rz_curve* c, int n_max, int precision_digits,
                       int decimal_digits, char** csv_out);
int rz_asymptotics_json(const rz_curve* c, int n_max, int precision_digits,
                        char** json_out);

/* Special-uniformity crosscheck for a single rank:
 *   {"n": int, "samples": [{"y": "num/den", "equal": bool}]}
 * and for ranks 1..n_max:
 *   {"reports": [...], "all_equal": bool}
 */
int rz_su_report(const rz_curve* c, int n, int samples, char** json_out);
int rz_su_report_range(const rz_curve* c, int n_max, int samples,
                       char** json_out);

/* Built-in property suite over embedded fixture curves. all_pass_out is 1
 * iff every suite passed; the report lists each suite with pass/fail.
 */
int rz_selftest_run(char** json_out, int* all_pass_out);

#ifdef __cplusplus
}
#endif

#endif
