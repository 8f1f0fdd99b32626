#include "selftest.hpp"

#include <json.hpp>

#include "rh.hpp"
#include "su.hpp"

namespace rz {

namespace {

CurveDatum fixture() {
    return CurveDatum::from_point_counts(Int(2), 2, {Int(3), Int(9)});
}

std::vector<CurveDatum> genus1_curves() {
    return {
        CurveDatum::from_point_counts(Int(2), 1, {Int(3)}),
        CurveDatum::from_point_counts(Int(3), 1, {Int(5)}),
        CurveDatum::from_point_counts(Int(4), 1, {Int(5)}),
        CurveDatum::from_point_counts(Int(5), 1, {Int(8)}),
    };
}

std::vector<CurveDatum> genus2_curves() {
    return {
        CurveDatum::from_point_counts(Int(2), 2, {Int(3), Int(9)}),
        CurveDatum::from_point_counts(Int(3), 2, {Int(4), Int(20)}),
        CurveDatum::from_point_counts(Int(4), 2, {Int(5), Int(25)}),
        CurveDatum::from_point_counts(Int(5), 2, {Int(6), Int(46)}),
        CurveDatum::from_point_counts(Int(2), 2, {Int(2), Int(12)}),
    };
}

// the weight configurations exercised by the mass formulas
std::vector<WeightSpec> weight_grid(int n) {
    WeightSpec plain;
    WeightSpec d1;
    d1.fractional_d = 1;
    d1.sign_mode = SignMode::alternating;
    WeightSpec dn1;
    dn1.fractional_d = n - 1;
    dn1.sign_mode = SignMode::alternating;
    WeightSpec first;
    first.boundary = Boundary::first_exponent;
    first.boundary_scale = 1;
    first.boundary_offset = 1;
    WeightSpec last;
    last.boundary = Boundary::last_exponent;
    last.boundary_scale = -1;
    last.boundary_offset = 0;
    return {plain, d1, dn1, first, last};
}

SelftestResult dp_equals_bruteforce() {
    CurveDatum c = fixture();
    for (int n = 1; n <= 12; ++n) {
        int idx = 0;
        for (const WeightSpec& w : weight_grid(n)) {
            if (mass_sum_dp(c, n, w) != mass_sum_bruteforce(c, n, w))
                return {"dp_equals_bruteforce", false,
                        "mismatch at n = " + std::to_string(n) + ", grid entry " + std::to_string(idx)};
            ++idx;
        }
    }
    return {"dp_equals_bruteforce", true, "exact equality, n <= 12, 5-entry weight grid"};
}

SelftestResult sign_convention_identity() {
    CurveDatum c = fixture();
    for (int n = 1; n <= 12; ++n) {
        WeightSpec alt;
        alt.sign_mode = SignMode::alternating;
        WeightSpec absorbed;
        if (mass_sum_bruteforce(c, n, alt) != mass_sum_bruteforce(c, n, absorbed))
            return {"sign_convention_identity", false, "mismatch at n = " + std::to_string(n)};
    }
    return {"sign_convention_identity", true, "alternating equals absorbed at d = 0, n <= 12"};
}

SelftestResult naturality() {
    auto check = [](const CurveDatum& c) {
        InvariantTable t(c);
        RankZetaPolynomial z = rank_zeta_polynomial(t, 1);
        if (z.alpha0 != 1) return false;
        for (size_t i = 0; i < z.coeffs.size(); ++i)
            if (z.coeffs[i] != Rational(c.coeffs()[i])) return false;
        return true;
    };
    for (const auto& c : genus1_curves())
        if (!check(c)) return {"rank1_naturality", false, "genus-1 curve mismatch"};
    for (const auto& c : genus2_curves())
        if (!check(c)) return {"rank1_naturality", false, "genus-2 curve mismatch"};
    return {"rank1_naturality", true, "rank-1 coefficients equal the degree-2g input polynomial on 9 curves"};
}

SelftestResult structural_identities() {
    InvariantTable t(fixture());
    for (int n = 1; n <= 20; ++n) {
        RankZetaPolynomial z = rank_zeta_polynomial(t, n);
        if (!check_functional_equation(z))
            return {"functional_equation_and_residues", false, "functional equation fails at n = " + std::to_string(n)};
        if (!check_residues(z))
            return {"functional_equation_and_residues", false, "residue identity fails at n = " + std::to_string(n)};
    }
    return {"functional_equation_and_residues", true, "exact for n <= 20"};
}

SelftestResult periodicity() {
    InvariantTable t(fixture());
    for (int n = 1; n <= 10; ++n)
        for (long d = -n; d <= 2 * n; ++d)
            if (t.beta_hat_d(n, d) != t.beta_hat_d(n, d + n))
                return {"beta_hat_periodicity", false,
                        "period break at n = " + std::to_string(n) + ", d = " + std::to_string(d)};
    return {"beta_hat_periodicity", true, "beta_hat(n, d) = beta_hat(n, d + n) for n <= 10, d in [-n, 2n]"};
}

SelftestResult genus1_rh() {
    for (const auto& c : genus1_curves()) {
        InvariantTable t(c);
        for (int n = 1; n <= 15; ++n) {
            RHStatus st = rh_verdict(rank_zeta_polynomial(t, n));
            if (!rh_holds(st))
                return {"genus1_rh", false,
                        "verdict " + std::string(to_string(st)) + " at q = " + to_string(c.q()) +
                            ", n = " + std::to_string(n)};
        }
    }
    return {"genus1_rh", true, "holds for all n <= 15 on 4 genus-1 curves"};
}

SelftestResult rank23_rh() {
    for (const auto& c : genus2_curves()) {
        InvariantTable t(c);
        for (int n = 2; n <= 3; ++n) {
            RHStatus st = rh_verdict(rank_zeta_polynomial(t, n));
            if (!rh_holds(st))
                return {"rank23_rh", false,
                        "verdict " + std::string(to_string(st)) + " at q = " + to_string(c.q()) +
                            ", n = " + std::to_string(n)};
        }
    }
    return {"rank23_rh", true, "holds at n = 2, 3 on 5 genus-2 curves"};
}

SelftestResult su_crosscheck_suite() {
    InvariantTable t(fixture());
    for (int n = 1; n <= 4; ++n) {
        for (const auto& s : su_crosscheck(t, n, 3)) {
            if (!s.equal)
                return {"decomposition_crosscheck", false,
                        "mismatch at n = " + std::to_string(n) + ", y = " + to_string(s.y)};
        }
    }
    return {"decomposition_crosscheck", true, "decomposition equals assembled value, n <= 4, 3 samples each"};
}

} // namespace

std::vector<SelftestResult> run_selftest() {
    return {
        dp_equals_bruteforce(),
        sign_convention_identity(),
        naturality(),
        structural_identities(),
        periodicity(),
        genus1_rh(),
        rank23_rh(),
        su_crosscheck_suite(),
    };
}

bool selftest_all_pass(const std::vector<SelftestResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

std::string selftest_report_json(const std::vector<SelftestResult>& results) {
    nlohmann::json suites = nlohmann::json::array();
    for (const auto& r : results)
        suites.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    nlohmann::json doc{{"suites", suites}, {"all_pass", selftest_all_pass(results)}};
    return doc.dump(2) + "\n";
}

} // namespace rz
