#include "su.hpp"

#include <algorithm>

#include "compositions.hpp"

namespace rz {

namespace {

struct SummandParts {
    Rational left, mid, right;
};

SummandParts su_summand(const CurveDatum& c, int n, int a, const Rational& y) {
    const Int& q = c.q();
    SummandParts parts;

    // middle factor: completed rank-1 zeta at u = y q^{a-n}
    Rational u = y * qpow(q, a - n);
    if (u == 0 || u == 1 || u == Rational(q))
        fail(RZ_ERR_POLE_EVALUATION,
             "rank-1 factor at a = " + std::to_string(a) + " hits a pole at u = " + to_string(u));
    parts.mid = c.zeta_hat_completed(u);

    if (n - a == 0) {
        parts.left = 1;
    } else {
        SumOptions w;
        w.last = [&c, n, a, &y](int kp) -> Rational {
            Rational denom = 1 - y * qpow(c.q(), a + kp - n);
            if (denom == 0)
                fail(RZ_ERR_POLE_EVALUATION, "left bracket at a = " + std::to_string(a) +
                                                 ", trailing part " + std::to_string(kp) +
                                                 " hits a pole");
            return Rational(1) / denom;
        };
        parts.left = weighted_sum_dp(c, n - a, w);
    }

    if (a - 1 == 0) {
        parts.right = 1;
    } else {
        SumOptions w;
        w.first = [&c, n, a, &y](int l1) -> Rational {
            Rational denom = 1 - qpow(c.q(), n - a + 1 + l1) / y;
            if (denom == 0)
                fail(RZ_ERR_POLE_EVALUATION, "right bracket at a = " + std::to_string(a) +
                                                 ", leading part " + std::to_string(l1) +
                                                 " hits a pole");
            return Rational(1) / denom;
        };
        parts.right = weighted_sum_dp(c, a - 1, w);
    }
    return parts;
}

} // namespace

Rational su_zeta_eval(const CurveDatum& c, int n, const Rational& y) {
    if (n < 1) fail(RZ_ERR_INVALID_ARGUMENT, "the decomposition needs n >= 1");
    if (c.genus() != 1 && c.genus() != 2)
        fail(RZ_ERR_UNSUPPORTED_GENUS, "the decomposition is only available for genus 1 and 2");
    if (y == 0) fail(RZ_ERR_POLE_EVALUATION, "y must be nonzero");
    Rational total(0);
    for (int a = 1; a <= n; ++a) {
        SummandParts p = su_summand(c, n, a, y);
        total += p.left * p.mid * p.right;
    }
    const long e = static_cast<long>(n) * (n - 1) / 2 * (c.genus() - 1);
    return qpow(c.q(), e) * total;
}

std::vector<Rational> su_pole_parameters(const CurveDatum& c, int n) {
    std::vector<Rational> poles;
    for (int m = 0; m <= n; ++m) poles.push_back(qpow(c.q(), m));
    return poles;
}

std::vector<SUSample> su_crosscheck(const InvariantTable& table, int n, int samples) {
    if (samples < 1) fail(RZ_ERR_INVALID_ARGUMENT, "need at least one sample point");
    const CurveDatum& c = table.curve();
    RankZetaPolynomial z = rank_zeta_polynomial(table, n);
    auto poles = su_pole_parameters(c, n);

    std::vector<SUSample> out;
    // deterministic small-height sequence 3, 5/2, 7/3, 9/4, ...
    for (long k = 0; static_cast<int>(out.size()) < samples; ++k) {
        Rational y = make_rational(2 * k + 3, k + 1);
        if (std::find(poles.begin(), poles.end(), y) != poles.end()) continue;
        SUSample sample;
        sample.y = y;
        Rational total(0);
        for (int a = 1; a <= n; ++a) {
            SummandParts p = su_summand(c, n, a, y);
            Rational v = p.left * p.mid * p.right;
            sample.per_a.push_back(v);
            total += v;
        }
        const long e = static_cast<long>(n) * (n - 1) / 2 * (c.genus() - 1);
        sample.total = qpow(c.q(), e) * total;
        sample.reference = zeta_hat_eval(z, Rational(1) / y);
        sample.equal = (sample.total == sample.reference);
        out.push_back(std::move(sample));
    }
    return out;
}

} // namespace rz
