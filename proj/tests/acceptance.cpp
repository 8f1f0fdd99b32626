// Acceptance gate: one line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "compositions.hpp"
#include "error.hpp"
#include "rh.hpp"
#include "su.hpp"

using namespace rz;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d (%s): %s\n", pass ? "PASS" : "FAIL", number, name.c_str(),
                detail.c_str());
    if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

CurveDatum fixture() { return CurveDatum::from_point_counts(2, 2, {3, 9}); }

std::vector<CurveDatum> genus1_curves() {
    return {CurveDatum::from_point_counts(2, 1, {3}), CurveDatum::from_point_counts(3, 1, {5}),
            CurveDatum::from_point_counts(4, 1, {5}), CurveDatum::from_point_counts(5, 1, {8})};
}

std::vector<CurveDatum> genus2_curves() {
    return {CurveDatum::from_point_counts(2, 2, {3, 9}),
            CurveDatum::from_point_counts(3, 2, {4, 20}),
            CurveDatum::from_point_counts(4, 2, {5, 25}),
            CurveDatum::from_point_counts(5, 2, {6, 46}),
            CurveDatum::from_point_counts(2, 2, {2, 12})};
}

double to_double(const Rational& r) {
    mpf_class x(0, 256);
    mpf_set_q(x.get_mpf_t(), r.get_mpq_t());
    return mpf_get_d(x.get_mpf_t());
}

double log2_of(const Rational& r) {
    mpf_class x(0, 256);
    mpf_set_q(x.get_mpf_t(), r.get_mpq_t());
    long e = 0;
    double m = mpf_get_d_2exp(&e, x.get_mpf_t());
    return std::log2(m) + static_cast<double>(e);
}

void check_oracle_equivalence() {
    auto t0 = std::chrono::steady_clock::now();
    CurveDatum c = fixture();
    bool ok = true;
    long cases = 0;
    for (int n = 1; n <= 12 && ok; ++n) {
        std::vector<WeightSpec> grid;
        WeightSpec plain;
        grid.push_back(plain);
        WeightSpec alt;
        alt.sign_mode = SignMode::alternating;
        for (long d : {0L, 1L, static_cast<long>(n - 1)}) {
            WeightSpec w = alt;
            w.fractional_d = d;
            grid.push_back(w);
        }
        WeightSpec first;
        first.boundary = Boundary::first_exponent;
        first.boundary_scale = 1;
        first.boundary_offset = 1;
        grid.push_back(first);
        WeightSpec last;
        last.boundary = Boundary::last_exponent;
        last.boundary_scale = -1;
        last.boundary_offset = 0;
        grid.push_back(last);
        for (const WeightSpec& w : grid) {
            ok = ok && (mass_sum_dp(c, n, w) == mass_sum_bruteforce(c, n, w));
            ++cases;
        }
    }
    double dt = seconds_since(t0);
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "memoized = brute force on %ld weighted sums, n <= 12, %.2fs (budget 60s)", cases,
                  dt);
    criterion(1, "oracle equivalence", ok && dt < 60.0, buf);
}

void check_naturality() {
    int checked = 0;
    bool ok = true;
    auto verify = [&](const CurveDatum& c) {
        InvariantTable t(c);
        RankZetaPolynomial z = rank_zeta_polynomial(t, 1);
        ok = ok && z.alpha0 == 1 && z.coeffs.size() == c.coeffs().size();
        for (size_t i = 0; i < z.coeffs.size() && ok; ++i)
            ok = z.coeffs[i] == Rational(c.coeffs()[i]);
        ++checked;
    };
    for (const auto& c : genus1_curves()) verify(c);
    for (const auto& c : genus2_curves()) verify(c);
    criterion(2, "rank-1 naturality", ok && checked >= 5,
              "normalized rank-1 coefficients equal the input numerator on " +
                  std::to_string(checked) + " curves (q in {2,3,4,5}, genus 1 and 2)");
}

void check_functional_equation_and_residues() {
    InvariantTable t(fixture());
    bool ok = true;
    for (int n = 1; n <= 20; ++n) {
        RankZetaPolynomial z = rank_zeta_polynomial(t, n);
        ok = ok && check_functional_equation(z) && check_residues(z);
    }
    RankZetaPolynomial z2 = rank_zeta_polynomial(t, 2);
    bool specials = poly_eval(z2, 1) == 413 && poly_eval(z2, Rational("1/4")) == Rational("413/16");
    criterion(3, "functional equation and residues", ok && specials,
              std::string("exact for n <= 20 on the fixture; P_2(1) = 413 and P_2(1/4) = 413/16: ") +
                  (specials ? "exact" : "MISMATCH"));
}

void check_rh_oracles() {
    bool ok = true;
    for (const auto& c : genus1_curves()) {
        InvariantTable t(c);
        for (int n = 1; n <= 15; ++n) ok = ok && rh_holds(rh_verdict(rank_zeta_polynomial(t, n)));
    }
    for (const auto& c : genus2_curves()) {
        InvariantTable t(c);
        for (int n = 2; n <= 3; ++n) ok = ok && rh_holds(rh_verdict(rank_zeta_polynomial(t, n)));
    }
    InvariantTable f(fixture());
    RankZetaPolynomial z2 = rank_zeta_polynomial(f, 2);
    QuadraticSplit s = quadratic_split(z2);
    bool split_ok = rh_verdict(z2) == RHStatus::holds_strict && s.sum == Rational("3/2") &&
                    s.product == -3 && s.disc == Rational("57/4");
    criterion(4, "theorem-backed RH oracles", ok && split_ok,
              std::string("holds on genus-1 curves for n <= 15 and genus-2 curves for n in {2,3}; "
                          "fixture n=2 split (3/2, -3, 57/4) ") +
                  (split_ok ? "confirmed" : "MISMATCH"));
}

void check_special_uniformity() {
    auto t0 = std::chrono::steady_clock::now();
    InvariantTable t(fixture());
    bool ok = true;
    int points = 0;
    for (int n = 1; n <= 6; ++n) {
        auto samples = su_crosscheck(t, n, 3);
        for (const auto& s : samples) {
            ok = ok && s.equal;
            ++points;
        }
    }
    // rank 1 must literally reproduce the completed rank-1 zeta
    const CurveDatum& c = t.curve();
    for (const char* y : {"3", "5/2", "7/3"})
        ok = ok && su_zeta_eval(c, 1, Rational(y)) == c.zeta_hat_completed(Rational(y));
    double dt = seconds_since(t0);
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "decomposition = assembled value at %d pole-free points, n <= 6; rank 1 "
                  "reproduces the completed zeta; %.2fs (budget 120s)",
                  points, dt);
    criterion(5, "special-uniformity crosscheck", ok && dt < 120.0, buf);
}

void check_asymptotics() {
    InvariantTable t(fixture());
    ConvergenceSeries s = asymptotic_series(t, 20, 64);
    auto row = [&](int n) -> const ConvergenceRow& { return s.rows[n - 1]; };

    struct Residual {
        const char* name;
        Rational ConvergenceRow::*field;
    };
    const Residual residuals[] = {{"r_a", &ConvergenceRow::r_a},
                                  {"r_b", &ConvergenceRow::r_b},
                                  {"r_beta", &ConvergenceRow::r_beta},
                                  {"r_alpha", &ConvergenceRow::r_alpha}};

    bool monotone = true;
    std::string monotone_detail;
    for (const auto& r : residuals)
        for (int n = 7; n <= 20; ++n) {
            Rational prev = abs(row(n - 1).*(r.field)), cur = abs(row(n).*(r.field));
            if (cur > prev) {
                monotone = false;
                char buf[96];
                std::snprintf(buf, sizeof buf, " %s rises at %d->%d (%.3f -> %.3f);", r.name, n - 1,
                              n, to_double(prev), to_double(cur));
                monotone_detail += buf;
            }
        }

    bool halving = true;
    std::string halving_detail;
    for (const auto& r : residuals)
        for (int n = 9; n <= 20; ++n) {
            Rational prev = abs(row(n - 1).*(r.field)), cur = abs(row(n).*(r.field));
            if (2 * cur > prev) {
                halving = false;
                char buf[96];
                std::snprintf(buf, sizeof buf, " %s contracts by only %.4f at %d->%d;", r.name,
                              to_double(prev / cur), n - 1, n);
                halving_detail += buf;
            }
        }

    bool tail = abs(row(20).r_a) < Rational(1, 100);
    bool rc_ok = row(12).r_c_approx < 0.05 && row(20).r_c_approx < 0.01;
    bool constants = s.c_beta == 51 && s.c_alpha == 33;
    bool identity = true;
    for (const auto& c : genus2_curves()) {
        InvariantTable tc(c);
        ConvergenceSeries sc = asymptotic_series(tc, 3, 64);
        Rational q(c.q());
        identity = identity && (sc.c_beta - sc.c_alpha == 2 * q + 2 * (q - 1) * c.v_hat(1));
    }

    std::printf("  - residual magnitudes non-increasing for n >= 6: %s%s\n",
                monotone ? "yes" : "NO;", monotone_detail.c_str());
    std::printf("  - residuals halve per step for 8 <= n <= 20: %s%s\n", halving ? "yes" : "NO;",
                halving_detail.c_str());
    std::printf("  - |r_a(20)| = %.3g < 1e-2: %s\n", to_double(abs(row(20).r_a)),
                tail ? "yes" : "NO");
    std::printf("  - r_c(12) = %.4f < 0.05 and r_c(20) = %.6f < 1e-2: %s\n", row(12).r_c_approx,
                row(20).r_c_approx, rc_ok ? "yes" : "NO");
    std::printf("  - fixture constants c_beta = 51, c_alpha = 33: %s\n",
                constants ? "yes" : "NO");
    std::printf("  - c_beta - c_alpha = 2q + 2(q-1)v_1 exact on all genus-2 test curves: %s\n",
                identity ? "yes" : "NO");

    const bool pass = monotone && halving && tail && rc_ok && constants && identity;
    criterion(6, "asymptotic limits", pass,
              pass ? "all sub-checks green"
                   : "sub-checks above; the failing ones demand a strictly faster decay than the "
                     "series exhibits at ranks 6-9");
}

void check_growth_exponents() {
    CurveDatum c = fixture();
    InvariantTable t(c);
    const double logq = log2_of(Rational(c.q()));
    bool ok = true;
    double worst = 0;
    for (int n = 5; n <= 20; ++n) {
        const double tol = 5.0 / n;
        struct Item {
            double measured;
            double expected;
        };
        const Item items[] = {
            {log2_of(t.v_hat(n)) / logq, n * (n + 1) / 2.0},
            {log2_of(t.beta_hat_zero(n)) / logq, n * (n + 1) / 2.0},
            {log2_of(t.beta_zero(n)) / logq, static_cast<double>(n) * n},
            {log2_of(t.alpha_zero(n)) / logq, static_cast<double>(n) * (n - 1)},
        };
        for (const auto& it : items) {
            double rel = std::fabs(it.measured / it.expected - 1.0);
            if (rel > worst) worst = rel;
            ok = ok && rel <= tol;
        }
    }
    Rational gap = abs(t.beta_hat_zero(20) / t.v_hat(20) - 1);
    bool gap_ok = gap < Rational(1, 1000);
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "log_q exponents within 5/n of the limits for 5 <= n <= 20 (worst rel. err. "
                  "%.3f); |beta_hat_20/v_hat_20 - 1| = %.3g",
                  worst, to_double(gap));
    criterion(7, "growth exponents", ok && gap_ok, buf);
}

void check_periodicity() {
    InvariantTable t(fixture());
    bool ok = true;
    for (int n = 1; n <= 10; ++n)
        for (long d = -n; d <= 2 * n; ++d)
            ok = ok && t.beta_hat_d(n, d) == t.beta_hat_d(n, d + n);
    criterion(8, "periodicity", ok, "beta_hat(n, d) = beta_hat(n, d + n) exactly, n <= 10, d in [-n, 2n]");
}

void check_selftest_binary() {
    auto t0 = std::chrono::steady_clock::now();
    const std::string cmd = std::string(CLI_BIN) + " selftest > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    const double dt = seconds_since(t0);
    const bool exited_zero = status != -1 && WIFEXITED(status) && WEXITSTATUS(status) == 0;
    char buf[120];
    std::snprintf(buf, sizeof buf, "`selftest` exited %d in %.2fs (budget 300s)",
                  exited_zero ? 0 : status, dt);
    criterion(9, "end-to-end selftest", exited_zero && dt < 300.0, buf);
}

} // namespace

int main() {
    try {
        check_oracle_equivalence();
        check_naturality();
        check_functional_equation_and_residues();
        check_rh_oracles();
        check_special_uniformity();
        check_asymptotics();
        check_growth_exponents();
        check_periodicity();
        check_selftest_binary();
    } catch (const Error& e) {
        std::printf("[FAIL] unexpected engine error: %s (code %d)\n", e.what(), e.code());
        return 1;
    } catch (const std::exception& e) {
        std::printf("[FAIL] unexpected error: %s\n", e.what());
        return 1;
    }
    if (g_failures) {
        std::printf("%d of 9 criteria failed\n", g_failures);
        return 1;
    }
    std::printf("all 9 criteria passed\n");
    return 0;
}
