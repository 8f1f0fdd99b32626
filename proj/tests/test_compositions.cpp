#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "compositions.hpp"
#include "error.hpp"

using namespace rz;

namespace {

Rational rat(const char* s) { return Rational(s); }

CurveDatum fixture() { return CurveDatum::from_point_counts(2, 2, {3, 9}); }

std::vector<WeightSpec> weight_grid(int n) {
    WeightSpec plain;
    WeightSpec alt1;
    alt1.sign_mode = SignMode::alternating;
    alt1.fractional_d = 1;
    WeightSpec altn1;
    altn1.sign_mode = SignMode::alternating;
    altn1.fractional_d = n - 1;
    WeightSpec first;
    first.boundary = Boundary::first_exponent;
    first.boundary_scale = 1;
    first.boundary_offset = 1;
    WeightSpec last;
    last.boundary = Boundary::last_exponent;
    last.boundary_scale = -1;
    last.boundary_offset = 0;
    return {plain, alt1, altn1, first, last};
}

} // namespace

TEST_CASE("composition enumeration is lexicographic and complete") {
    std::vector<std::vector<int>> got;
    for (CompositionEnum e(4); !e.done(); e.next()) got.push_back(e.parts());
    std::vector<std::vector<int>> expect{{1, 1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {1, 3},
                                         {2, 1, 1},    {2, 2},    {3, 1},   {4}};
    CHECK(got == expect);

    for (int n = 1; n <= 12; ++n) {
        long count = 0;
        for (CompositionEnum e(n); !e.done(); e.next()) {
            int sum = 0;
            for (int p : e.parts()) sum += p;
            REQUIRE(sum == n);
            ++count;
        }
        CHECK(count == (1L << (n - 1)));
    }

    CHECK_THROWS_AS(CompositionEnum(0), Error);
}

TEST_CASE("memoized sum equals brute force across the weight grid") {
    CurveDatum c = fixture();
    for (int n = 1; n <= 12; ++n)
        for (const WeightSpec& w : weight_grid(n))
            CHECK(mass_sum_dp(c, n, w) == mass_sum_bruteforce(c, n, w));
}

TEST_CASE("memoized sum equals brute force with custom boundary functors") {
    CurveDatum c = fixture();
    SumOptions w;
    w.first = [](int p) -> Rational { return Rational(1) / (p + 1); };
    w.last = [](int p) -> Rational { return Rational(2 * p - 1); };
    for (int n = 1; n <= 10; ++n)
        CHECK(weighted_sum_dp(c, n, w) == weighted_sum_bruteforce(c, n, w));

    SumOptions alt = w;
    alt.alternating = true;
    alt.fractional_d = 2;
    for (int n = 3; n <= 10; ++n)
        CHECK(weighted_sum_dp(c, n, alt) == weighted_sum_bruteforce(c, n, alt));
}

TEST_CASE("sign conventions agree at d = 0") {
    CurveDatum c = fixture();
    WeightSpec alt;
    alt.sign_mode = SignMode::alternating;
    WeightSpec absorbed;
    absorbed.sign_mode = SignMode::absorbed;
    for (int n = 1; n <= 10; ++n)
        CHECK(mass_sum_bruteforce(c, n, alt) == mass_sum_bruteforce(c, n, absorbed));
}

TEST_CASE("plain absorbed sums match frozen values") {
    CurveDatum c = fixture();
    WeightSpec plain;
    const char* expect[] = {"7",          "413/6",          "22547/24",
                            "57534757/2880", "1045365015499/1428480", "20461332100456163/411402240"};
    for (int n = 1; n <= 6; ++n) CHECK(mass_sum_dp(c, n, plain) == rat(expect[n - 1]));
}

TEST_CASE("boundary-weighted sums match frozen values") {
    CurveDatum c = fixture();
    WeightSpec first;
    first.boundary = Boundary::first_exponent;
    first.boundary_scale = 1;
    first.boundary_offset = 1;
    const char* ef[] = {"28", "616", "48832/3", "1987972/3", "4265121833/90"};
    for (int n = 1; n <= 5; ++n) CHECK(mass_sum_dp(c, n, first) == rat(ef[n - 1]));

    WeightSpec last;
    last.boundary = Boundary::last_exponent;
    last.boundary_scale = -1;
    last.boundary_offset = 0;
    const char* el[] = {"7/2", "105/8", "5705/64", "1055145/1024", "671326537/32768"};
    for (int n = 1; n <= 5; ++n) CHECK(mass_sum_dp(c, n, last) == rat(el[n - 1]));
}

TEST_CASE("fractional twists match frozen values") {
    CurveDatum c = fixture();
    auto twisted = [&](int n, long d) {
        WeightSpec w;
        w.sign_mode = SignMode::alternating;
        w.fractional_d = d;
        return mass_sum_dp(c, n, w);
    };
    CHECK(twisted(2, 1) == rat("105/2"));
    CHECK(twisted(3, 1) == rat("5705/8"));
    CHECK(twisted(3, 2) == rat("5705/8"));
    CHECK(twisted(5, 2) == rat("686779177/1024"));
    CHECK(twisted(5, 3) == rat("686779177/1024"));
}

TEST_CASE("invalid arguments are rejected") {
    CurveDatum c = fixture();
    WeightSpec bad;
    bad.sign_mode = SignMode::absorbed;
    bad.fractional_d = 1;
    try {
        mass_sum_dp(c, 3, bad);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == RZ_ERR_INVALID_ARGUMENT);
    }
    CHECK_THROWS_AS(mass_sum_dp(c, 0, WeightSpec{}), Error);
}
