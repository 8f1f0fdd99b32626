#pragma once

#include <vector>

#include "assembly.hpp"

namespace rz {

struct SUSample {
    Rational y;
    std::vector<Rational> per_a; // the a-th summand, before the global q-power
    Rational total;
    Rational reference; // zeta_hat_eval at T = 1/y
    bool equal;
};

/* Rank-n zeta value at y = q^{ns} from the rank-1 decomposition:
 *
 *   q^{binom(n,2)(g-1)} sum_{a=1}^{n} [left over comps of n-a] *
 *     zeta-hat(y q^{a-n}) * [right over comps of a-1]
 *
 * where each bracket multiplies v-hat factors over (1 - q^{k_j + k_{j+1}})
 * adjacent denominators, the left bracket carries a trailing factor
 * 1/(1 - y q^{a + k_p - n}) in its last part k_p, the right bracket a leading
 * factor 1/(1 - q^{n - a + 1 + l_1} / y) in its first part l_1, and an empty
 * composition range contributes 1.
 */
Rational su_zeta_eval(const CurveDatum& c, int n, const Rational& y);

// Parameters y where some factor of the rank-n decomposition has a pole:
// exactly the q-powers q^0 .. q^n.
std::vector<Rational> su_pole_parameters(const CurveDatum& c, int n);

// Evaluates decomposition and assembled reference at `samples` deterministic
// pole-free rationals (3, 5/2, 7/3, ... skipping pole parameters) and reports
// exact equality for each.
std::vector<SUSample> su_crosscheck(const InvariantTable& table, int n, int samples);

} // namespace rz
