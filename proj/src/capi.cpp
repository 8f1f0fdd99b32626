#include "rankzeta.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "report.hpp"
#include "selftest.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Runs fn, routing typed failures into error codes and the thread-local
// message slot.
template <typename Fn>
int guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        fn();
        return RZ_OK;
    } catch (const rz::Error& e) {
        g_last_error = e.what();
        return e.code();
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return RZ_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown failure";
        return RZ_ERR_INTERNAL;
    }
}

int default_precision(int digits) {
    if (digits <= 0) return 64;
    if (digits < 16) rz::fail(RZ_ERR_INVALID_ARGUMENT, "precision must be at least 16 digits");
    return digits;
}

} // namespace

struct rz_curve {
    rz::CurveDatum datum;
    rz::InvariantTable table;
    explicit rz_curve(rz::CurveDatum d) : datum(d), table(std::move(d)) {}
};

extern "C" {

const char* rz_error_message(void) {
    return g_last_error.c_str();
}

void rz_string_free(char* s) {
    std::free(s);
}

void rz_curve_free(rz_curve* c) {
    delete c;
}

int rz_curve_from_json(const char* json, rz_curve** out) {
    return guarded([&] {
        if (!json || !out) rz::fail(RZ_ERR_INVALID_ARGUMENT, "null argument");
        *out = new rz_curve(rz::curve_from_json_text(json));
    });
}

int rz_curve_from_point_counts(long long q, int genus, const long long* counts, size_t len,
                               rz_curve** out) {
    return guarded([&] {
        if (!counts || !out) rz::fail(RZ_ERR_INVALID_ARGUMENT, "null argument");
        std::vector<rz::Int> n;
        for (size_t i = 0; i < len; ++i) n.emplace_back(static_cast<long>(counts[i]));
        *out = new rz_curve(rz::CurveDatum::from_point_counts(rz::Int(static_cast<long>(q)), genus, n));
    });
}

int rz_curve_from_coeffs(long long q, int genus, const long long* coeffs, size_t len,
                         rz_curve** out) {
    return guarded([&] {
        if (!coeffs || !out) rz::fail(RZ_ERR_INVALID_ARGUMENT, "null argument");
        std::vector<rz::Int> c;
        for (size_t i = 0; i < len; ++i) c.emplace_back(static_cast<long>(coeffs[i]));
        *out = new rz_curve(rz::CurveDatum::from_coeffs(rz::Int(static_cast<long>(q)), genus, c));
    });
}

int rz_artin_report(const rz_curve* c, int precision_digits, char** json_out) {
    return guarded([&] {
        if (!c || !json_out) rz::fail(RZ_ERR_INVALID_ARGUMENT, "null argument");
        *json_out = dup_string(rz::artin_report_json(c->datum, default_precision(precision_digits)));
    });
}

int rz_validation_ok(const rz_curve* c, int precision_digits, int* ok_out) {
    return guarded([&] {
        if (!c || !ok_out) rz::fail(RZ_ERR_INVALID_ARGUMENT, "null argument");
        *ok_out = rz::validate_weil_datum(c->datum, default_precision(precision_digits)).all_pass ? 1 : 0;
    });
}

int rz_invariants_report(const rz_curve* c, int n_max, int decimal_digits, char** json_out) {
    return guarded([&] {
        if (!c || !json_out) rz::fail(RZ_ERR_INVALID_ARGUMENT, "null argument");
        *json_out = dup_string(rz::invariants_report_json(c->table, n_max, decimal_digits));
    });
}

int rz_zeta_poly_report(const rz_curve* c, int n, int decimal_digits, char** json_out) {
    return guarded([&] {
        if (!c || !json_out) rz::fail(RZ_ERR_INVALID_ARGUMENT, "null argument");
        *json_out = dup_string(rz::zeta_poly_report_json(c->table, n, decimal_digits));
    });
}

int rz_rh_report(const rz_curve* c, int n_lo, int n_hi, int precision_digits, char** json_out) {
    return guarded([&] {
        if (!c || !json_out) rz::fail(RZ_ERR_INVALID_ARGUMENT, "null argument");
        *json_out = dup_string(rz::rh_report_json(c->table, n_lo, n_hi, default_precision(precision_digits)));
    });
}

int rz_asymptotics_csv(const rz_curve* c, int n_max, int precision_digits, int decimal_digits,
                       char** csv_out) {
    return guarded([&] {
        if (!c || !csv_out) rz::fail(RZ_ERR_INVALID_ARGUMENT, "null argument");
        rz::ConvergenceSeries s =
            rz::asymptotic_series(c->table, n_max, default_precision(precision_digits));
        *csv_out = dup_string(rz::series_to_csv(s, decimal_digits));
    });
}

int rz_asymptotics_json(const rz_curve* c, int n_max, int precision_digits, char** json_out) {
    return guarded([&] {
        if (!c || !json_out) rz::fail(RZ_ERR_INVALID_ARGUMENT, "null argument");
        *json_out = dup_string(rz::asymptotics_json(c->table, n_max, default_precision(precision_digits)));
    });
}

int rz_su_report(const rz_curve* c, int n, int samples, char** json_out) {
    return guarded([&] {
        if (!c || !json_out) rz::fail(RZ_ERR_INVALID_ARGUMENT, "null argument");
        *json_out = dup_string(rz::su_report_json(c->table, n, samples));
    });
}

int rz_su_report_range(const rz_curve* c, int n_max, int samples, char** json_out) {
    return guarded([&] {
        if (!c || !json_out) rz::fail(RZ_ERR_INVALID_ARGUMENT, "null argument");
        *json_out = dup_string(rz::su_report_range_json(c->table, n_max, samples));
    });
}

int rz_selftest_run(char** json_out, int* all_pass_out) {
    return guarded([&] {
        if (!json_out || !all_pass_out) rz::fail(RZ_ERR_INVALID_ARGUMENT, "null argument");
        auto results = rz::run_selftest();
        *json_out = dup_string(rz::selftest_report_json(results));
        *all_pass_out = rz::selftest_all_pass(results) ? 1 : 0;
    });
}

} // extern "C"
