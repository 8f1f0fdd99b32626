#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "rational.hpp"

namespace rz {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

struct ValidationReport {
    std::vector<CheckResult> checks;
    bool all_pass;
};

namespace detail {
// Thread-safe per-curve cache for the cumulative product v-hat.
struct VhatCache {
    std::mutex mu;
    std::map<int, Rational> values;
};
} // namespace detail

/* The arithmetic input: base-field size q, genus g, point counts N_1..N_g,
 * and the degree-2g numerator polynomial of the rank-1 zeta. Exactly one of
 * point counts / coefficients is supplied; the other is derived. Immutable
 * after construction; safe to share across threads.
 */
class CurveDatum {
public:
    static CurveDatum from_point_counts(const Int& q, int genus, const std::vector<Int>& counts);
    static CurveDatum from_coeffs(const Int& q, int genus, const std::vector<Int>& coeffs);

    const Int& q() const { return q_; }
    int genus() const { return genus_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    const std::vector<Int>& point_counts() const { return counts_; } // N_1..N_g

    // P evaluated at a rational argument, exact (Horner).
    Rational poly_at(const Rational& t) const;

    // Completed rank-1 zeta at u = q^s; poles at u in {0, 1, q}.
    Rational zeta_hat_completed(const Rational& u) const;

    // zeta-hat at integer arguments: m >= 2 is the completed value at u = q^m;
    // m = 1 is the regularized value q^{g-1} P(1/q) / (1 - 1/q).
    Rational zeta_hat_at_integer(int m) const;

    // v_n = zeta-hat*(1) zeta-hat(2) ... zeta-hat(n), memoized.
    Rational v_hat(int n) const;

private:
    CurveDatum() = default;
    Int q_;
    int genus_ = 0;
    std::vector<Int> coeffs_;
    std::vector<Int> counts_;
    std::shared_ptr<detail::VhatCache> vhat_cache_;
};

// Coefficients of the degree-2g numerator from N_1..N_g: matches the first
// g series coefficients of exp(sum N_k t^k / k) (1-t)(1-qt), upper half
// completed by the symmetry coeff(2g-i) = q^{g-i} coeff(i). Errors if any
// derived coefficient is non-integral.
std::vector<Int> derive_artin_coefficients(const Int& q, int genus, const std::vector<Int>& counts);

// N_k = q^k + 1 - p_k, p_k the k-th power sum of the reciprocal roots,
// via Newton's identities on the coefficients.
Int point_count(const std::vector<Int>& coeffs, const Int& q, int k);

// Report-only checks: coefficient symmetry, point-count bounds
// |N_k - (q^k + 1)| <= 2g q^{k/2} for k = 1..g, and the numeric root-norm
// test | |root| - q^{-1/2} | < 1e-9 at max(64, precision_digits) digits.
ValidationReport validate_weil_datum(const CurveDatum& c, int precision_digits);

} // namespace rz
