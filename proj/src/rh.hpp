#pragma once

#include <string>
#include <vector>

#include "assembly.hpp"
#include "roots.hpp"

namespace rz {

enum class RHStatus {
    holds_strict,
    holds_boundary,
    fails_real_root_off_line,
    fails_complex_pairing,
};

const char* to_string(RHStatus s);
inline bool rh_holds(RHStatus s) {
    return s == RHStatus::holds_strict || s == RHStatus::holds_boundary;
}

// c_1, c_2 as roots of x^2 - sum x + product, disc = sum^2 - 4 product.
// The normalized numerator factors as (1 + c_1 T + Q T^2)(1 + c_2 T + Q T^2).
struct QuadraticSplit {
    Rational sum;     // a_n
    Rational product; // b_n - 2Q
    Rational disc;
};

// Exact sign of u + v sqrt(Q).
struct SurdSign {
    Rational u, v;
    int sign;
};

struct NumericRoot {
    std::string re, im;
    std::string abs_over_sqrt_q;
};

struct RHReport {
    int n = 0;
    int genus = 0;
    Int Q;
    RHStatus status = RHStatus::fails_real_root_off_line;
    bool has_split = false;
    QuadraticSplit split;
    bool has_interval_margins = false;
    SurdSign g_plus, g_minus; // boundary values of g(x) = x^2 - a x + (b - 2Q) at x = +-2 sqrt(Q)
    Rational vertex_lhs, vertex_rhs; // a^2 vs 16Q (genus 2) or 4Q (genus 1)
    int vertex_sign = 0;
    std::vector<NumericRoot> roots; // reciprocal roots, report-only
    std::string max_norm_deviation; // max | |root|/sqrt(Q) - 1 |
    bool roots_consistent = true;   // holds_* implies deviation < 1e-9
};

int sign_u_plus_v_sqrt(const Rational& u, const Rational& v, const Int& Q);

QuadraticSplit quadratic_split(const RankZetaPolynomial& z); // genus 2 only

// Exact three-way verdict, no floating point. Genus 2: complex split
// parameters fail; real ones must lie in (-2 sqrt(Q), 2 sqrt(Q)), decided by
// the signs of g(+-2 sqrt(Q)) and the vertex bound a^2 < 16Q; any boundary
// equality (including a double split, disc = 0) degrades strict to boundary.
// Genus 1: the same interval test on the single parameter, a^2 vs 4Q.
RHStatus rh_verdict(const RankZetaPolynomial& z);

// Verdict plus margins and numeric reciprocal-root norms at precision_digits.
RHReport rh_status(const RankZetaPolynomial& z, int precision_digits);

struct ConvergenceRow {
    int n;
    Rational r_a, r_b, r_beta, r_alpha;
    std::string r_c; // decimal
    double r_c_approx;
    RHStatus status;
};

/* Exact residuals against the large-n limits, for genus 2:
 *   r_a     = a_n - (N_1 - 1)
 *   r_b     = b_n - (N_2 + N_1^2 - 2 N_1)
 *   r_beta  = Q beta0/alpha0   - Q^2 - N_1 Q - c_beta
 *   r_alpha = Q alpha_n_n/alpha0 - Q^2 - N_1 Q - c_alpha
 *   r_c     = max_i | |c_i| / (2 sqrt(Q)) - sqrt(2)/2 |  (numeric)
 * with c_beta = q + (q-1) v_1 + 2 q^2 v_1 - 2 v_1 and
 * c_alpha = 2 q^2 v_1 - q v_1 - v_1 - q; always
 * c_beta - c_alpha = 2q + 2(q-1) v_1.
 */
struct ConvergenceSeries {
    Rational c_beta, c_alpha;
    std::vector<ConvergenceRow> rows;
};

ConvergenceSeries asymptotic_series(const InvariantTable& table, int n_max, int precision_digits);

// Header n,r_a,r_b,r_beta,r_alpha,r_c,status; exact columns as "num/den",
// r_c decimal, LF line endings. decimal_digits > 0 appends decimal columns
// for the four exact residuals.
std::string series_to_csv(const ConvergenceSeries& s, int decimal_digits);

std::string rational_to_decimal(const Rational& r, int digits);

} // namespace rz
