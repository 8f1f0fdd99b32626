#include "assembly.hpp"

#include <cassert>

namespace rz {

RankZetaPolynomial rank_zeta_polynomial(const InvariantTable& table, int n) {
    if (n < 1) fail(RZ_ERR_INVALID_ARGUMENT, "rank must be >= 1");
    const CurveDatum& c = table.curve();
    const int g = c.genus();
    if (g != 1 && g != 2)
        fail(RZ_ERR_UNSUPPORTED_GENUS, "zeta assembly is only available for genus 1 and 2");

    RankZetaPolynomial z;
    z.n = n;
    z.genus = g;
    z.q = c.q();
    z.Q = ipow(c.q(), static_cast<unsigned long>(n));
    z.alpha0 = table.alpha_zero(n);
    z.beta0 = table.beta_zero(n);
    const Rational Q(z.Q);
    if (g == 2) {
        z.alphann = table.alpha_n_n(n);
        const Rational ratio = z.alphann / z.alpha0;
        z.a = ratio - (Q + 1);
        z.b = (Q - 1) * z.beta0 / z.alpha0 + 2 * Q - (Q + 1) * ratio;
        z.coeffs = {Rational(1), z.a, z.b, z.a * Q, Q * Q};
    } else {
        z.a = (Q - 1) * z.beta0 / z.alpha0 - (Q + 1);
        z.coeffs = {Rational(1), z.a, Q};
    }
    return z;
}

Rational poly_eval(const RankZetaPolynomial& z, const Rational& T) {
    Rational acc(0);
    for (auto it = z.coeffs.rbegin(); it != z.coeffs.rend(); ++it) acc = acc * T + *it;
    return acc * z.alpha0;
}

bool check_functional_equation(const RankZetaPolynomial& z) {
    const int g = z.genus;
    const Rational Q(z.Q);
    for (int i = 0; i <= g; ++i) {
        Rational scale(1);
        for (int j = 0; j < g - i; ++j) scale *= Q;
        if (z.coeffs[2 * g - i] != scale * z.coeffs[i]) return false;
    }
    return true;
}

bool check_residues(const RankZetaPolynomial& z) {
    const Rational Q(z.Q);
    if (poly_eval(z, Rational(1)) != (Q - 1) * z.beta0) return false;
    Rational invQ = Rational(1) / Q;
    Rational scale = (Q - 1) * z.beta0;
    for (int j = 0; j < z.genus; ++j) scale *= invQ;
    return poly_eval(z, invQ) == scale;
}

Rational zeta_hat_eval_additive(const RankZetaPolynomial& z, const Rational& T) {
    const Rational Q(z.Q);
    Rational s = (z.genus == 2) ? z.alpha0 * (Rational(1) / T + Q * T) + z.alphann : z.alpha0;
    s += (Q - 1) * z.beta0 * T / ((1 - T) * (1 - Q * T));
    return s;
}

Rational zeta_hat_eval(const RankZetaPolynomial& z, const Rational& T) {
    const Rational Q(z.Q);
    if (T == 1 || T == Rational(1) / Q || (z.genus >= 2 && T == 0))
        fail(RZ_ERR_POLE_EVALUATION, "zeta-hat has a pole at T = " + to_string(T));
    Rational denom = (1 - T) * (1 - Q * T);
    for (int j = 1; j < z.genus; ++j) denom *= T;
    Rational value = poly_eval(z, T) / denom;
    assert(value == zeta_hat_eval_additive(z, T));
    return value;
}

} // namespace rz
