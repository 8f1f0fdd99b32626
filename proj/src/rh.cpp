#include "rh.hpp"

#include <sstream>

namespace rz {

const char* to_string(RHStatus s) {
    switch (s) {
        case RHStatus::holds_strict: return "holds_strict";
        case RHStatus::holds_boundary: return "holds_boundary";
        case RHStatus::fails_real_root_off_line: return "fails_real_root_off_line";
        case RHStatus::fails_complex_pairing: return "fails_complex_pairing";
    }
    return "unknown";
}

int sign_u_plus_v_sqrt(const Rational& u, const Rational& v, const Int& Q) {
    const int su = sgn(u), sv = sgn(v);
    if (sv == 0) return su;
    if (su == 0) return sv;
    if (su > 0 && sv > 0) return 1;
    if (su < 0 && sv < 0) return -1;
    // opposite signs: compare u^2 against v^2 Q
    const int cmpsq = cmp(u * u, v * v * Rational(Q));
    if (su > 0) return cmpsq > 0 ? 1 : (cmpsq < 0 ? -1 : 0);
    return cmpsq > 0 ? -1 : (cmpsq < 0 ? 1 : 0);
}

QuadraticSplit quadratic_split(const RankZetaPolynomial& z) {
    if (z.genus != 2) fail(RZ_ERR_UNSUPPORTED_GENUS, "the quadratic split requires genus 2");
    QuadraticSplit s;
    s.sum = z.a;
    s.product = z.b - 2 * Rational(z.Q);
    s.disc = s.sum * s.sum - 4 * s.product;
    return s;
}

namespace {

RHStatus verdict_genus1(const RankZetaPolynomial& z) {
    const int c = cmp(z.a * z.a, 4 * Rational(z.Q));
    if (c < 0) return RHStatus::holds_strict;
    if (c == 0) return RHStatus::holds_boundary;
    return RHStatus::fails_real_root_off_line;
}

} // namespace

RHStatus rh_verdict(const RankZetaPolynomial& z) {
    if (z.genus == 1) return verdict_genus1(z);
    if (z.genus != 2) fail(RZ_ERR_UNSUPPORTED_GENUS, "the exact verdict requires genus 1 or 2");
    QuadraticSplit s = quadratic_split(z);
    if (s.disc < 0) return RHStatus::fails_complex_pairing;
    // g(x) = x^2 - a x + (b - 2Q) at x = +-2 sqrt(Q): (b + 2Q) -+ 2a sqrt(Q)
    const Rational u = z.b + 2 * Rational(z.Q);
    const int sp = sign_u_plus_v_sqrt(u, -2 * z.a, z.Q);
    const int sm = sign_u_plus_v_sqrt(u, 2 * z.a, z.Q);
    const int vx = cmp(z.a * z.a, 16 * Rational(z.Q));
    if (s.disc > 0 && sp > 0 && sm > 0 && vx < 0) return RHStatus::holds_strict;
    if (sp >= 0 && sm >= 0 && vx <= 0) return RHStatus::holds_boundary;
    return RHStatus::fails_real_root_off_line;
}

RHReport rh_status(const RankZetaPolynomial& z, int precision_digits) {
    RHReport r;
    r.n = z.n;
    r.genus = z.genus;
    r.Q = z.Q;
    r.status = rh_verdict(z);
    if (z.genus == 2) {
        r.has_split = true;
        r.split = quadratic_split(z);
        const Rational u = z.b + 2 * Rational(z.Q);
        r.g_plus = {u, -2 * z.a, sign_u_plus_v_sqrt(u, -2 * z.a, z.Q)};
        r.g_minus = {u, 2 * z.a, sign_u_plus_v_sqrt(u, 2 * z.a, z.Q)};
        r.has_interval_margins = (r.split.disc >= 0);
        r.vertex_lhs = z.a * z.a;
        r.vertex_rhs = 16 * Rational(z.Q);
    } else {
        r.vertex_lhs = z.a * z.a;
        r.vertex_rhs = 4 * Rational(z.Q);
    }
    r.vertex_sign = cmp(r.vertex_lhs, r.vertex_rhs);

    // reciprocal roots: roots of the reversed normalized polynomial
    std::vector<Rational> rev(z.coeffs.rbegin(), z.coeffs.rend());
    auto roots = poly_roots(rev, precision_digits);
    const mp_bitcnt_t prec = precision_bits(precision_digits);
    mpf_class qf(0, prec);
    mpf_set_z(qf.get_mpf_t(), z.Q.get_mpz_t());
    mpf_class sqrtQ(0, prec);
    mpf_sqrt(sqrtQ.get_mpf_t(), qf.get_mpf_t());
    mpf_class worst(0, prec);
    for (const auto& root : roots) {
        mpf_class ratio = complex_abs(root) / sqrtQ;
        mpf_class dev = ratio - 1;
        mpf_abs(dev.get_mpf_t(), dev.get_mpf_t());
        if (dev > worst) worst = dev;
        r.roots.push_back({mpf_to_string(root.re, precision_digits),
                           mpf_to_string(root.im, precision_digits),
                           mpf_to_string(ratio, precision_digits)});
    }
    r.max_norm_deviation = mpf_to_string(worst, 6);
    mpf_class tol(1, prec);
    mpf_div_ui(tol.get_mpf_t(), tol.get_mpf_t(), 1000000000ul);
    r.roots_consistent = !(rh_holds(r.status) && worst >= tol);
    return r;
}

std::string rational_to_decimal(const Rational& r, int digits) {
    const mp_bitcnt_t prec = precision_bits(digits);
    mpf_class x(0, prec);
    mpf_set_q(x.get_mpf_t(), r.get_mpq_t());
    return mpf_to_string(x, digits);
}

ConvergenceSeries asymptotic_series(const InvariantTable& table, int n_max, int precision_digits) {
    const CurveDatum& c = table.curve();
    if (c.genus() != 2) fail(RZ_ERR_UNSUPPORTED_GENUS, "the residual series requires genus 2");
    if (n_max < 3) fail(RZ_ERR_INVALID_ARGUMENT, "the residual series needs n_max >= 3");

    const Rational q(c.q());
    const Rational v1 = c.v_hat(1);
    const Rational n1(c.point_counts()[0]);
    const Rational n2(c.point_counts()[1]);

    ConvergenceSeries out;
    out.c_beta = q + (q - 1) * v1 + 2 * q * q * v1 - 2 * v1;
    out.c_alpha = 2 * q * q * v1 - q * v1 - v1 - q;

    const mp_bitcnt_t prec = precision_bits(precision_digits);
    mpf_class half_sqrt2(0, prec);
    mpf_sqrt_ui(half_sqrt2.get_mpf_t(), 2);
    half_sqrt2 /= 2;

    for (int n = 1; n <= n_max; ++n) {
        RankZetaPolynomial z = rank_zeta_polynomial(table, n);
        const Rational Q(z.Q);
        ConvergenceRow row;
        row.n = n;
        row.r_a = z.a - (n1 - 1);
        row.r_b = z.b - (n2 + n1 * n1 - 2 * n1);
        row.r_beta = Q * z.beta0 / z.alpha0 - Q * Q - n1 * Q - out.c_beta;
        row.r_alpha = Q * z.alphann / z.alpha0 - Q * Q - n1 * Q - out.c_alpha;
        row.status = rh_verdict(z);

        // |c_i|: real pair (a +- sqrt(D))/2 for D >= 0, else common modulus
        // sqrt(b - 2Q) of the conjugate pair
        QuadraticSplit s = quadratic_split(z);
        mpf_class L(0, prec), tmp(0, prec);
        mpf_set_z(L.get_mpf_t(), z.Q.get_mpz_t());
        mpf_sqrt(L.get_mpf_t(), L.get_mpf_t());
        L *= 2;
        mpf_class dev(0, prec);
        if (s.disc >= 0) {
            mpf_class a(0, prec), sq(0, prec);
            mpf_set_q(a.get_mpf_t(), z.a.get_mpq_t());
            mpf_set_q(sq.get_mpf_t(), s.disc.get_mpq_t());
            mpf_sqrt(sq.get_mpf_t(), sq.get_mpf_t());
            for (int pm = 0; pm < 2; ++pm) {
                mpf_class ci(0, prec);
                if (pm == 0) ci = (a + sq) / 2;
                else ci = (a - sq) / 2;
                mpf_abs(ci.get_mpf_t(), ci.get_mpf_t());
                mpf_class d2 = ci / L - half_sqrt2;
                mpf_abs(d2.get_mpf_t(), d2.get_mpf_t());
                if (d2 > dev) dev = d2;
            }
        } else {
            mpf_class m2(0, prec);
            mpf_set_q(m2.get_mpf_t(), s.product.get_mpq_t());
            mpf_sqrt(m2.get_mpf_t(), m2.get_mpf_t());
            mpf_class d2 = m2 / L - half_sqrt2;
            mpf_abs(d2.get_mpf_t(), d2.get_mpf_t());
            dev = d2;
        }
        row.r_c = mpf_to_string(dev, precision_digits);
        row.r_c_approx = mpf_get_d(dev.get_mpf_t());
        out.rows.push_back(std::move(row));
    }
    return out;
}

std::string series_to_csv(const ConvergenceSeries& s, int decimal_digits) {
    std::ostringstream os;
    os << "n,r_a,r_b,r_beta,r_alpha,r_c,status";
    if (decimal_digits > 0) os << ",r_a_dec,r_b_dec,r_beta_dec,r_alpha_dec";
    os << "\n";
    for (const auto& row : s.rows) {
        os << row.n << ',' << to_string(row.r_a) << ',' << to_string(row.r_b) << ','
           << to_string(row.r_beta) << ',' << to_string(row.r_alpha) << ',' << row.r_c << ','
           << to_string(row.status);
        if (decimal_digits > 0) {
            os << ',' << rational_to_decimal(row.r_a, decimal_digits) << ','
               << rational_to_decimal(row.r_b, decimal_digits) << ','
               << rational_to_decimal(row.r_beta, decimal_digits) << ','
               << rational_to_decimal(row.r_alpha, decimal_digits);
        }
        os << "\n";
    }
    return os.str();
}

} // namespace rz
