#pragma once

#include <map>
#include <mutex>
#include <utility>

#include "compositions.hpp"
#include "curve.hpp"

namespace rz {

/* Memoized mass invariants of one curve. All values exact; concurrent
 * readers are safe, cache writes are serialized.
 *
 *   beta_zero(n)  = q^{(g-1) n (n-1)/2} beta_hat_zero(n)
 *   alpha_zero(1) = 1,  alpha_zero(n) = q^{(n-1)(g-1)} beta_zero(n-1)
 *   beta_hat_d periodic in d with period n
 */
class InvariantTable {
public:
    explicit InvariantTable(CurveDatum curve) : curve_(std::move(curve)) {}

    const CurveDatum& curve() const { return curve_; }

    Rational v_hat(int n) const { return curve_.v_hat(n); }
    Rational beta_hat_zero(int n) const;
    Rational beta_hat_d(int n, long d) const;
    Rational beta_zero(int n) const;
    Rational alpha_zero(int n) const;

    // Degree-n mass for genus 2 via the closed four-term formula:
    // q^{binom(n,2)} [ N_1 beta_hat_zero(n-1) + mass_first(n-1) - mass_last(n-1)
    //                  - sum_{a=2}^{n-1} mass_last(n-a) beta_hat_zero(a-1) ];
    // n = 1 gives N_1.
    Rational alpha_n_n(int n) const;

    // Boundary-weighted composition sums used by alpha_n_n:
    // mass_first carries q^{1 + first part}, mass_last carries q^{-last part}.
    Rational mass_first(int n) const;
    Rational mass_last(int n) const;

private:
    CurveDatum curve_;
    mutable std::mutex mu_;
    mutable std::map<int, Rational> bh0_, mfirst_, mlast_;
    mutable std::map<std::pair<int, long>, Rational> bhd_;
};

} // namespace rz
