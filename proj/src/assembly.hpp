#pragma once

#include <vector>

#include "invariants.hpp"

namespace rz {

/* Rank-n zeta numerator in T. normalized coeffs are
 * (1, a_n, b_n, a_n Q, Q^2) for genus 2 and (1, a_n, Q) for genus 1,
 * with Q = q^n; the unnormalized polynomial is alpha0 times that.
 */
struct RankZetaPolynomial {
    int n = 0;
    int genus = 0;
    Int q;
    Int Q; // q^n
    Rational alpha0;
    Rational beta0;
    Rational alphann; // genus 2 only
    Rational a;
    Rational b; // genus 2 only
    std::vector<Rational> coeffs;
};

// Genus 2: a_n = alpha_n_n/alpha0 - (Q+1),
//          b_n = (Q-1) beta0/alpha0 + 2Q - (Q+1) alpha_n_n/alpha0.
// Genus 1: P_n(T) = alpha0 (1-T)(1-QT) + (Q-1) beta0 T, normalized.
RankZetaPolynomial rank_zeta_polynomial(const InvariantTable& table, int n);

// alpha0 * sum coeffs[i] T^i, exact.
Rational poly_eval(const RankZetaPolynomial& z, const Rational& T);

// coeff(2g-i) = Q^{g-i} coeff(i) for all i, exactly.
bool check_functional_equation(const RankZetaPolynomial& z);

// P(1) = (Q-1) beta0 and P(1/Q) = (Q-1) Q^{-g} beta0, exactly.
bool check_residues(const RankZetaPolynomial& z);

// P(T) / ((1-T)(1-QT) T^{g-1}); poles at T in {1, 1/Q} and T = 0 for g >= 2.
// Debug builds also evaluate the additive expansion and assert agreement.
Rational zeta_hat_eval(const RankZetaPolynomial& z, const Rational& T);

// The term expansion: alpha0 (T^{-1} + QT) + alpha_n_n + tail for genus 2,
// alpha0 + tail for genus 1, tail = (Q-1) beta0 T / ((1-T)(1-QT)).
Rational zeta_hat_eval_additive(const RankZetaPolynomial& z, const Rational& T);

} // namespace rz
