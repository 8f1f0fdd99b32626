#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curve.hpp"
#include "error.hpp"

using namespace rz;

namespace {

Rational rat(const char* s) { return Rational(s); }

CurveDatum fixture() { return CurveDatum::from_point_counts(2, 2, {3, 9}); }

int thrown_code(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return -1;
}

} // namespace

TEST_CASE("coefficients derived from point counts") {
    CurveDatum c = fixture();
    CHECK(c.coeffs() == std::vector<Int>{1, 0, 2, 0, 4});
    CHECK(c.point_counts() == std::vector<Int>{3, 9});

    CurveDatum e = CurveDatum::from_point_counts(2, 1, {3});
    CHECK(e.coeffs() == std::vector<Int>{1, 0, 2});

    CurveDatum g2 = CurveDatum::from_point_counts(3, 2, {4, 20});
    CHECK(g2.coeffs()[0] == 1);
    CHECK(g2.coeffs()[4] == 9);
    for (int k = 1; k <= 2; ++k)
        CHECK(point_count(g2.coeffs(), 3, k) == g2.point_counts()[k - 1]);
}

TEST_CASE("point counts recovered from coefficients") {
    CurveDatum c = CurveDatum::from_coeffs(2, 2, {1, 0, 2, 0, 4});
    CHECK(c.point_counts() == std::vector<Int>{3, 9});
    const std::vector<Int> expect{3, 9, 9, 25, 33, 33};
    for (int k = 1; k <= 6; ++k) CHECK(point_count(c.coeffs(), 2, k) == expect[k - 1]);
}

TEST_CASE("derivation and construction reject bad input") {
    CHECK(thrown_code([] { CurveDatum::from_point_counts(2, 2, {3, 10}); }) ==
          RZ_ERR_NON_INTEGRAL_COEFFICIENT);
    CHECK(thrown_code([] { CurveDatum::from_point_counts(2, 2, {3}); }) == RZ_ERR_LENGTH_MISMATCH);
    CHECK(thrown_code([] { CurveDatum::from_point_counts(2, 0, {}); }) == RZ_ERR_INVALID_ARGUMENT);
    CHECK(thrown_code([] { CurveDatum::from_point_counts(1, 1, {2}); }) == RZ_ERR_INVALID_ARGUMENT);
    CHECK(thrown_code([] { CurveDatum::from_point_counts(2, 1, {-1}); }) == RZ_ERR_INVALID_ARGUMENT);

    CHECK(thrown_code([] { CurveDatum::from_coeffs(2, 2, {1, 0, 2, 0}); }) == RZ_ERR_LENGTH_MISMATCH);
    CHECK(thrown_code([] { CurveDatum::from_coeffs(2, 2, {2, 0, 2, 0, 4}); }) == RZ_ERR_INVALID_ARGUMENT);
    CHECK(thrown_code([] { CurveDatum::from_coeffs(2, 2, {1, 0, 2, 0, 5}); }) == RZ_ERR_INVALID_ARGUMENT);
    CHECK(thrown_code([] { CurveDatum::from_coeffs(2, 2, {1, 1, 2, 0, 4}); }) == RZ_ERR_INVALID_ARGUMENT);
}

TEST_CASE("polynomial evaluation") {
    CurveDatum c = fixture();
    CHECK(c.poly_at(1) == 7);
    CHECK(c.poly_at(rat("1/2")) == rat("7/4"));
    CHECK(c.poly_at(0) == 1);
}

TEST_CASE("completed zeta values and poles") {
    CurveDatum c = fixture();
    CHECK(c.zeta_hat_at_integer(1) == 7);
    CHECK(c.zeta_hat_at_integer(2) == rat("73/6"));

    for (const Rational& u : {Rational(0), Rational(1), Rational(2)})
        CHECK(thrown_code([&] { c.zeta_hat_completed(u); }) == RZ_ERR_POLE_EVALUATION);
    CHECK_NOTHROW(c.zeta_hat_completed(rat("3")));
    CHECK(thrown_code([&] { c.zeta_hat_at_integer(0); }) == RZ_ERR_INVALID_ARGUMENT);

    CurveDatum e = CurveDatum::from_point_counts(2, 1, {3});
    CHECK(e.zeta_hat_at_integer(1) == 3);
}

TEST_CASE("cumulative product v_hat") {
    CurveDatum c = fixture();
    const char* expect[] = {"7",
                            "511/6",
                            "77161/72",
                            "182022799/8640",
                            "47809562316943/64281600",
                            "28660828608198672697/573906124800"};
    for (int n = 1; n <= 6; ++n) CHECK(c.v_hat(n) == rat(expect[n - 1]));

    CurveDatum e = CurveDatum::from_point_counts(2, 1, {3});
    const char* expect1[] = {"3", "9", "99/7", "4257/245", "727947/37975"};
    for (int n = 1; n <= 5; ++n) CHECK(e.v_hat(n) == rat(expect1[n - 1]));
}

TEST_CASE("derivation roundtrips through point counts") {
    struct Input {
        long q;
        int g;
        std::vector<Int> counts;
    };
    const Input inputs[] = {{2, 1, {3}},    {3, 1, {5}},     {4, 1, {5}},
                            {5, 1, {8}},    {2, 2, {3, 9}},  {3, 2, {4, 20}},
                            {4, 2, {5, 25}}, {5, 2, {6, 46}}, {2, 2, {2, 12}}};
    for (const auto& in : inputs) {
        std::vector<Int> coeffs = derive_artin_coefficients(in.q, in.g, in.counts);
        for (int k = 1; k <= in.g; ++k) CHECK(point_count(coeffs, in.q, k) == in.counts[k - 1]);
    }
}

TEST_CASE("series derivation matches the genus-2 closed form") {
    // c1 = N1 - (q+1), c2 = (N1^2 + N2)/2 - (q+1) N1 + q
    struct Input {
        long q;
        Int n1, n2;
    };
    for (const auto& in : {Input{2, 3, 9}, Input{3, 4, 20}, Input{5, 6, 46}, Input{2, 2, 12}}) {
        std::vector<Int> c = derive_artin_coefficients(in.q, 2, {in.n1, in.n2});
        Int c1 = in.n1 - (in.q + 1);
        Int c2 = (in.n1 * in.n1 + in.n2) / 2 - (in.q + 1) * in.n1 + in.q;
        CHECK(c[1] == c1);
        CHECK(c[2] == c2);
    }
}

TEST_CASE("validation report") {
    ValidationReport good = validate_weil_datum(fixture(), 64);
    CHECK(good.all_pass);
    for (const auto& ch : good.checks) CHECK(ch.pass);

    // N_1 = 10 breaks the Weil bound for q = 2, g = 1; construction still works
    CurveDatum bad = CurveDatum::from_point_counts(2, 1, {10});
    ValidationReport rep = validate_weil_datum(bad, 64);
    CHECK_FALSE(rep.all_pass);
    bool bound_failed = false, norms_failed = false;
    for (const auto& ch : rep.checks) {
        if (ch.name.find("bound") != std::string::npos && !ch.pass) bound_failed = true;
        if (ch.name.find("norm") != std::string::npos && !ch.pass) norms_failed = true;
    }
    CHECK(bound_failed);
    CHECK(norms_failed);
}
