#include "report.hpp"

#include <json.hpp>

namespace rz {

using nlohmann::json;

CurveDatum curve_from_json_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        fail(RZ_ERR_PARSE, std::string("curve JSON: ") + e.what());
    }
    if (!doc.is_object()) fail(RZ_ERR_PARSE, "curve JSON must be an object");
    if (!doc.contains("q") || !doc["q"].is_number_integer())
        fail(RZ_ERR_PARSE, "curve JSON needs an integer \"q\"");
    if (!doc.contains("genus") || !doc["genus"].is_number_integer())
        fail(RZ_ERR_PARSE, "curve JSON needs an integer \"genus\"");
    const long long q = doc["q"].get<long long>();
    const int genus = doc["genus"].get<int>();
    const bool has_counts = doc.contains("point_counts");
    const bool has_coeffs = doc.contains("artin_coeffs");
    if (has_counts == has_coeffs)
        fail(RZ_ERR_PARSE, "curve JSON needs exactly one of \"point_counts\" / \"artin_coeffs\"");
    auto read_ints = [&doc](const char* key) {
        if (!doc[key].is_array()) fail(RZ_ERR_PARSE, std::string("\"") + key + "\" must be an array");
        std::vector<Int> out;
        for (const auto& v : doc[key]) {
            if (!v.is_number_integer()) fail(RZ_ERR_PARSE, std::string("\"") + key + "\" must hold integers");
            out.emplace_back(static_cast<long>(v.get<long long>()));
        }
        return out;
    };
    if (has_counts) return CurveDatum::from_point_counts(Int(static_cast<long>(q)), genus, read_ints("point_counts"));
    return CurveDatum::from_coeffs(Int(static_cast<long>(q)), genus, read_ints("artin_coeffs"));
}

namespace {

json validation_to_json(const ValidationReport& rep) {
    json checks = json::array();
    for (const auto& ch : rep.checks)
        checks.push_back({{"name", ch.name}, {"pass", ch.pass}, {"detail", ch.detail}});
    return {{"all_pass", rep.all_pass}, {"checks", checks}};
}

json surd_to_json(const SurdSign& s) {
    return {{"u", to_string(s.u)}, {"v", to_string(s.v)}, {"sign", s.sign}};
}

} // namespace

std::string artin_report_json(const CurveDatum& c, int precision_digits) {
    json coeffs = json::array(), counts = json::array();
    for (const Int& z : c.coeffs()) coeffs.push_back(to_string(z));
    for (int k = 1; k <= 2 * c.genus(); ++k)
        counts.push_back(to_string(point_count(c.coeffs(), c.q(), k)));
    json doc{{"q", c.q().get_si()},
             {"genus", c.genus()},
             {"coefficients", coeffs},
             {"point_counts", counts},
             {"validation", validation_to_json(validate_weil_datum(c, precision_digits))}};
    return doc.dump(2) + "\n";
}

std::string invariants_report_json(const InvariantTable& t, int n_max, int decimal_digits) {
    if (n_max < 1) fail(RZ_ERR_INVALID_ARGUMENT, "n_max must be >= 1");
    const CurveDatum& c = t.curve();
    json rows = json::array();
    for (int n = 1; n <= n_max; ++n) {
        json row{{"n", n},
                 {"v_hat", to_string(t.v_hat(n))},
                 {"beta_hat_zero", to_string(t.beta_hat_zero(n))},
                 {"beta_zero", to_string(t.beta_zero(n))},
                 {"alpha_zero", to_string(t.alpha_zero(n))}};
        if (c.genus() == 2) row["alpha_n_n"] = to_string(t.alpha_n_n(n));
        if (decimal_digits > 0) {
            row["v_hat_dec"] = rational_to_decimal(t.v_hat(n), decimal_digits);
            row["beta_hat_zero_dec"] = rational_to_decimal(t.beta_hat_zero(n), decimal_digits);
            row["beta_zero_dec"] = rational_to_decimal(t.beta_zero(n), decimal_digits);
            row["alpha_zero_dec"] = rational_to_decimal(t.alpha_zero(n), decimal_digits);
            if (c.genus() == 2) row["alpha_n_n_dec"] = rational_to_decimal(t.alpha_n_n(n), decimal_digits);
        }
        rows.push_back(std::move(row));
    }
    json doc{{"q", c.q().get_si()}, {"genus", c.genus()}, {"rows", rows}};
    return doc.dump(2) + "\n";
}

std::string zeta_poly_report_json(const InvariantTable& t, int n, int decimal_digits) {
    RankZetaPolynomial z = rank_zeta_polynomial(t, n);
    json coeffs = json::array();
    for (const Rational& co : z.coeffs) coeffs.push_back(to_string(co));
    json doc{{"n", z.n},
             {"Q", to_string(z.Q)},
             {"alpha0", to_string(z.alpha0)},
             {"coeffs", coeffs},
             {"beta_zero", to_string(z.beta0)},
             {"functional_equation", check_functional_equation(z)},
             {"residues", check_residues(z)}};
    if (decimal_digits > 0) {
        json dec = json::array();
        for (const Rational& co : z.coeffs) dec.push_back(rational_to_decimal(co, decimal_digits));
        doc["coeffs_dec"] = dec;
    }
    return doc.dump(2) + "\n";
}

std::string rh_report_json(const InvariantTable& t, int n_lo, int n_hi, int precision_digits) {
    if (n_lo < 1 || n_hi < n_lo) fail(RZ_ERR_INVALID_ARGUMENT, "need 1 <= n_lo <= n_hi");
    json rows = json::array();
    bool any_fails = false;
    for (int n = n_lo; n <= n_hi; ++n) {
        RHReport rep = rh_status(rank_zeta_polynomial(t, n), precision_digits);
        any_fails = any_fails || !rh_holds(rep.status);
        json row{{"n", rep.n},
                 {"Q", to_string(rep.Q)},
                 {"status", to_string(rep.status)},
                 {"max_norm_deviation", rep.max_norm_deviation},
                 {"roots_consistent", rep.roots_consistent}};
        if (rep.has_split) {
            row["split"] = {{"sum", to_string(rep.split.sum)},
                            {"product", to_string(rep.split.product)},
                            {"discriminant", to_string(rep.split.disc)}};
        }
        json margins{{"vertex",
                      {{"lhs", to_string(rep.vertex_lhs)},
                       {"rhs", to_string(rep.vertex_rhs)},
                       {"sign", rep.vertex_sign}}}};
        if (rep.has_interval_margins) {
            margins["g_plus"] = surd_to_json(rep.g_plus);
            margins["g_minus"] = surd_to_json(rep.g_minus);
        }
        row["margins"] = margins;
        json roots = json::array();
        for (const auto& root : rep.roots)
            roots.push_back({{"re", root.re}, {"im", root.im}, {"abs_over_sqrt_Q", root.abs_over_sqrt_q}});
        row["roots"] = roots;
        rows.push_back(std::move(row));
    }
    json doc{{"rows", rows}, {"any_fails", any_fails}};
    return doc.dump(2) + "\n";
}

std::string asymptotics_json(const InvariantTable& t, int n_max, int precision_digits) {
    ConvergenceSeries s = asymptotic_series(t, n_max, precision_digits);
    json rows = json::array();
    for (const auto& row : s.rows) {
        rows.push_back({{"n", row.n},
                        {"r_a", to_string(row.r_a)},
                        {"r_b", to_string(row.r_b)},
                        {"r_beta", to_string(row.r_beta)},
                        {"r_alpha", to_string(row.r_alpha)},
                        {"r_c", row.r_c},
                        {"status", to_string(row.status)}});
    }
    json doc{{"c_beta", to_string(s.c_beta)}, {"c_alpha", to_string(s.c_alpha)}, {"rows", rows}};
    return doc.dump(2) + "\n";
}

namespace {

json su_single_json(const InvariantTable& t, int n, int samples) {
    auto result = su_crosscheck(t, n, samples);
    json arr = json::array();
    for (const auto& s : result) arr.push_back({{"y", to_string(s.y)}, {"equal", s.equal}});
    return {{"n", n}, {"samples", arr}};
}

} // namespace

std::string su_report_json(const InvariantTable& t, int n, int samples) {
    return su_single_json(t, n, samples).dump(2) + "\n";
}

std::string su_report_range_json(const InvariantTable& t, int n_max, int samples) {
    if (n_max < 1) fail(RZ_ERR_INVALID_ARGUMENT, "n_max must be >= 1");
    json reports = json::array();
    bool all_equal = true;
    for (int n = 1; n <= n_max; ++n) {
        json rep = su_single_json(t, n, samples);
        for (const auto& s : rep["samples"]) all_equal = all_equal && s["equal"].get<bool>();
        reports.push_back(std::move(rep));
    }
    json doc{{"reports", reports}, {"all_equal", all_equal}};
    return doc.dump(2) + "\n";
}

} // namespace rz
