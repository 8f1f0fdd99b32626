#include "curve.hpp"

#include <sstream>

#include "roots.hpp"

namespace rz {

std::vector<Int> derive_artin_coefficients(const Int& q, int genus, const std::vector<Int>& counts) {
    if (genus < 1) fail(RZ_ERR_INVALID_ARGUMENT, "genus must be >= 1");
    if (q < 2) fail(RZ_ERR_INVALID_ARGUMENT, "q must be >= 2");
    if (static_cast<int>(counts.size()) != genus)
        fail(RZ_ERR_LENGTH_MISMATCH, "expected exactly " + std::to_string(genus) + " point counts");
    for (const Int& nk : counts)
        if (nk < 0) fail(RZ_ERR_INVALID_ARGUMENT, "point counts must be >= 0");

    const int g = genus;
    // E(t) = exp(sum N_k t^k / k) to order g: E_m = (1/m) sum_j j L_j E_{m-j}
    std::vector<Rational> L(g + 1, Rational(0)), E(g + 1, Rational(0));
    for (int k = 1; k <= g; ++k) L[k] = make_rational(counts[k - 1], k);
    E[0] = 1;
    for (int m = 1; m <= g; ++m) {
        Rational s(0);
        for (int j = 1; j <= m; ++j) s += j * L[j] * E[m - j];
        E[m] = s / m;
    }
    // multiply by (1-t)(1-qt) = 1 - (1+q)t + q t^2
    std::vector<Int> coeffs(2 * g + 1);
    for (int m = 0; m <= g; ++m) {
        Rational v = E[m];
        if (m >= 1) v -= Rational(1 + q) * E[m - 1];
        if (m >= 2) v += Rational(q) * E[m - 2];
        if (!is_integer(v)) {
            std::ostringstream os;
            os << "derived coefficient of degree " << m << " is " << to_string(v)
               << "; the point counts match no integral polynomial";
            fail(RZ_ERR_NON_INTEGRAL_COEFFICIENT, os.str());
        }
        coeffs[m] = v.get_num();
    }
    for (int i = 0; i < g; ++i) coeffs[2 * g - i] = ipow(q, g - i) * coeffs[i];
    return coeffs;
}

Int point_count(const std::vector<Int>& coeffs, const Int& q, int k) {
    if (k < 1) fail(RZ_ERR_INVALID_ARGUMENT, "k must be >= 1");
    const int deg = static_cast<int>(coeffs.size()) - 1;
    // e_i = (-1)^i c_i; p_m = (-1)^{m-1} m e_m + sum_{i<m} (-1)^{m-i-1} e_{m-i} p_i
    std::vector<Int> e(k + 1, Int(0)), p(k + 1, Int(0));
    for (int i = 0; i <= k && i <= deg; ++i) e[i] = (i % 2 ? -coeffs[i] : coeffs[i]);
    for (int m = 1; m <= k; ++m) {
        Int s = 0;
        if (m <= deg) s = ((m - 1) % 2 ? -1 : 1) * Int(m) * e[m];
        for (int i = 1; i < m; ++i) {
            if (m - i <= deg) s += ((m - i - 1) % 2 ? -1 : 1) * e[m - i] * p[i];
        }
        p[m] = s;
    }
    return ipow(q, static_cast<unsigned long>(k)) + 1 - p[k];
}

CurveDatum CurveDatum::from_point_counts(const Int& q, int genus, const std::vector<Int>& counts) {
    CurveDatum c;
    c.q_ = q;
    c.genus_ = genus;
    c.coeffs_ = derive_artin_coefficients(q, genus, counts);
    c.counts_.assign(counts.begin(), counts.end());
    c.vhat_cache_ = std::make_shared<detail::VhatCache>();
    return c;
}

CurveDatum CurveDatum::from_coeffs(const Int& q, int genus, const std::vector<Int>& coeffs) {
    if (genus < 1) fail(RZ_ERR_INVALID_ARGUMENT, "genus must be >= 1");
    if (q < 2) fail(RZ_ERR_INVALID_ARGUMENT, "q must be >= 2");
    if (static_cast<int>(coeffs.size()) != 2 * genus + 1)
        fail(RZ_ERR_LENGTH_MISMATCH,
             "expected " + std::to_string(2 * genus + 1) + " coefficients for genus " + std::to_string(genus));
    if (coeffs[0] != 1) fail(RZ_ERR_INVALID_ARGUMENT, "constant coefficient must be 1");
    if (coeffs[2 * genus] != ipow(q, genus)) fail(RZ_ERR_INVALID_ARGUMENT, "leading coefficient must be q^genus");
    for (int i = 0; i <= genus; ++i) {
        if (coeffs[2 * genus - i] != ipow(q, genus - i) * coeffs[i])
            fail(RZ_ERR_INVALID_ARGUMENT, "coefficients break the functional-equation symmetry at index " + std::to_string(i));
    }
    CurveDatum c;
    c.q_ = q;
    c.genus_ = genus;
    c.coeffs_ = coeffs;
    for (int k = 1; k <= genus; ++k) c.counts_.push_back(point_count(coeffs, q, k));
    c.vhat_cache_ = std::make_shared<detail::VhatCache>();
    return c;
}

Rational CurveDatum::poly_at(const Rational& t) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + Rational(*it);
    return acc;
}

Rational CurveDatum::zeta_hat_completed(const Rational& u) const {
    if (u == 0 || u == 1 || u == Rational(q_))
        fail(RZ_ERR_POLE_EVALUATION, "completed zeta has a pole at u = " + to_string(u));
    Rational inv = Rational(1) / u;
    Rational num = poly_at(inv); // u^{g-1} P(1/u)
    for (int i = 1; i < genus_; ++i) num *= u;
    return num / ((1 - inv) * (1 - Rational(q_) * inv));
}

Rational CurveDatum::zeta_hat_at_integer(int m) const {
    if (m < 1) fail(RZ_ERR_INVALID_ARGUMENT, "integer argument must be >= 1");
    if (m == 1) {
        Rational inv = make_rational(1, q_);
        Rational num = poly_at(inv);
        for (int i = 1; i < genus_; ++i) num *= Rational(q_);
        return num / (1 - inv);
    }
    return zeta_hat_completed(qpow(q_, m));
}

Rational CurveDatum::v_hat(int n) const {
    if (n < 1) fail(RZ_ERR_INVALID_ARGUMENT, "v_hat needs n >= 1");
    std::lock_guard<std::mutex> lock(vhat_cache_->mu);
    auto& memo = vhat_cache_->values;
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    int have = memo.empty() ? 0 : memo.rbegin()->first;
    Rational v = have ? memo.rbegin()->second : Rational(0);
    for (int m = have + 1; m <= n; ++m) {
        v = (m == 1) ? zeta_hat_at_integer(1) : v * zeta_hat_at_integer(m);
        memo.emplace(m, v);
    }
    return v;
}

ValidationReport validate_weil_datum(const CurveDatum& c, int precision_digits) {
    ValidationReport rep;
    const Int& q = c.q();
    const int g = c.genus();

    {
        bool ok = true;
        for (int i = 0; i <= g; ++i)
            ok = ok && (c.coeffs()[2 * g - i] == ipow(q, g - i) * c.coeffs()[i]);
        rep.checks.push_back({"coefficient_symmetry", ok,
                              ok ? "coeff(2g-i) = q^{g-i} coeff(i) for all i" : "symmetry broken"});
    }

    for (int k = 1; k <= g; ++k) {
        // |N_k - (q^k + 1)| <= 2g q^{k/2}, squared to stay in integers
        Int nk = point_count(c.coeffs(), q, k);
        Int dev = nk - ipow(q, k) - 1;
        Int lhs = dev * dev;
        Int rhs = Int(4) * g * g * ipow(q, k);
        bool ok = (nk >= 0) && (lhs <= rhs);
        std::ostringstream os;
        os << "N_" << k << " = " << to_string(nk) << ", deviation^2 " << to_string(lhs)
           << " vs bound " << to_string(rhs);
        rep.checks.push_back({"point_count_bound_k" + std::to_string(k), ok, os.str()});
    }

    {
        int digits = precision_digits < 64 ? 64 : precision_digits;
        std::vector<Rational> rc;
        for (const Int& z : c.coeffs()) rc.emplace_back(z);
        auto roots = poly_roots(rc, digits);
        mp_bitcnt_t prec = precision_bits(digits);
        mpf_class target(0, prec);
        mpf_class qf(0, prec);
        mpf_set_z(qf.get_mpf_t(), q.get_mpz_t());
        mpf_sqrt(target.get_mpf_t(), qf.get_mpf_t());
        target = 1 / target; // q^{-1/2}
        mpf_class worst(0, prec);
        for (const auto& r : roots) {
            mpf_class d = complex_abs(r) - target;
            mpf_abs(d.get_mpf_t(), d.get_mpf_t());
            if (d > worst) worst = d;
        }
        mpf_class tol(1, prec);
        mpf_div_ui(tol.get_mpf_t(), tol.get_mpf_t(), 1000000000ul); // 1e-9
        bool ok = roots.size() == static_cast<size_t>(2 * g) && worst < tol;
        rep.checks.push_back({"root_norms", ok,
                              "max | |root| - q^{-1/2} | = " + mpf_to_string(worst, 6)});
    }

    rep.all_pass = true;
    for (const auto& ch : rep.checks) rep.all_pass = rep.all_pass && ch.pass;
    return rep;
}

} // namespace rz
