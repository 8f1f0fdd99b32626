// Command-line surface over the C API. Links rankzeta.h only.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "rankzeta.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

struct StringGuard {
    char* value = nullptr;
    ~StringGuard() { rz_string_free(value); }
};

struct CurveGuard {
    rz_curve* value = nullptr;
    ~CurveGuard() { rz_curve_free(value); }
};

[[noreturn]] void die(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    std::exit(kExitUsage);
}

void die_on(int rc) {
    if (rc != RZ_OK) die(rz_error_message());
}

std::string load_curve_text(const std::string& arg) {
    if (!arg.empty() && arg[0] == '{') return arg;
    std::ifstream in(arg);
    if (!in) die("cannot read curve file: " + arg);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

rz_curve* open_curve(const std::string& arg, int precision, bool force, bool gate) {
    rz_curve* c = nullptr;
    die_on(rz_curve_from_json(load_curve_text(arg).c_str(), &c));
    if (gate) {
        int ok = 0;
        int rc = rz_validation_ok(c, precision, &ok);
        if (rc != RZ_OK) {
            rz_curve_free(c);
            die(rz_error_message());
        }
        if (!ok && !force) {
            rz_curve_free(c);
            die("curve fails validation (see the artin command); pass --force to proceed");
        }
    }
    return c;
}

// ---- pretty renderers ----

void print_kv(const std::string& key, const json& v) {
    std::cout << "  " << key << ": ";
    if (v.is_string()) std::cout << v.get<std::string>();
    else std::cout << v.dump();
    std::cout << "\n";
}

void pretty_artin(const json& doc) {
    std::cout << "curve: q = " << doc["q"] << ", genus = " << doc["genus"] << "\n";
    std::cout << "numerator coefficients:";
    for (const auto& c : doc["coefficients"]) std::cout << ' ' << c.get<std::string>();
    std::cout << "\npoint counts N_1..N_" << doc["point_counts"].size() << ":";
    for (const auto& c : doc["point_counts"]) std::cout << ' ' << c.get<std::string>();
    std::cout << "\nvalidation: " << (doc["validation"]["all_pass"].get<bool>() ? "pass" : "FAIL") << "\n";
    for (const auto& ch : doc["validation"]["checks"]) {
        std::cout << "  [" << (ch["pass"].get<bool>() ? "pass" : "FAIL") << "] "
                  << ch["name"].get<std::string>() << ": " << ch["detail"].get<std::string>() << "\n";
    }
}

void pretty_invariants(const json& doc) {
    std::cout << "invariants for q = " << doc["q"] << ", genus = " << doc["genus"] << "\n";
    for (const auto& row : doc["rows"]) {
        std::cout << "n = " << row["n"] << "\n";
        for (const char* key : {"v_hat", "beta_hat_zero", "beta_zero", "alpha_zero", "alpha_n_n"})
            if (row.contains(key)) print_kv(key, row[key]);
    }
}

void pretty_zeta_poly(const json& doc) {
    std::cout << "rank " << doc["n"] << ", Q = " << doc["Q"].get<std::string>()
              << ", alpha0 = " << doc["alpha0"].get<std::string>() << "\n";
    std::cout << "normalized coefficients:";
    for (const auto& c : doc["coeffs"]) std::cout << ' ' << c.get<std::string>();
    std::cout << "\nfunctional equation: " << (doc["functional_equation"].get<bool>() ? "holds" : "FAILS")
              << "\nresidue identities: " << (doc["residues"].get<bool>() ? "hold" : "FAIL") << "\n";
}

void pretty_rh(const json& doc) {
    for (const auto& row : doc["rows"]) {
        std::cout << "n = " << row["n"] << ": " << row["status"].get<std::string>();
        if (row.contains("split")) {
            const auto& s = row["split"];
            std::cout << "  (split sum " << s["sum"].get<std::string>() << ", product "
                      << s["product"].get<std::string>() << ", disc " << s["discriminant"].get<std::string>()
                      << ")";
        }
        std::cout << "  max | |root|/sqrt(Q) - 1 | = " << row["max_norm_deviation"].get<std::string>() << "\n";
    }
}

void pretty_su(const json& doc) {
    auto one = [](const json& rep) {
        std::cout << "n = " << rep["n"] << ":";
        for (const auto& s : rep["samples"])
            std::cout << "  y = " << s["y"].get<std::string>() << " -> "
                      << (s["equal"].get<bool>() ? "equal" : "MISMATCH");
        std::cout << "\n";
    };
    if (doc.contains("reports"))
        for (const auto& rep : doc["reports"]) one(rep);
    else
        one(doc);
}

void pretty_selftest(const json& doc) {
    for (const auto& s : doc["suites"])
        std::cout << "[" << (s["pass"].get<bool>() ? "pass" : "FAIL") << "] " << s["name"].get<std::string>()
                  << ": " << s["detail"].get<std::string>() << "\n";
    std::cout << (doc["all_pass"].get<bool>() ? "all suites passed" : "SELFTEST FAILED") << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact rank-n zeta computations for curves over finite fields"};
    app.require_subcommand(1);

    std::string curve_arg, format = "pretty", output;
    int precision = 64, n = 0, n_max = 0, samples = 5, su_bound = 8;
    bool force = false, decimal = false;

    auto add_common = [&](CLI::App* cmd, bool needs_curve) {
        if (needs_curve)
            cmd->add_option("--curve", curve_arg, "curve JSON (inline if it starts with '{', else a file path)")
                ->required();
        cmd->add_option("--format", format, "output format: pretty | json | csv")
            ->check(CLI::IsMember({"pretty", "json", "csv"}));
        cmd->add_option("--precision", precision, "decimal digits for numeric columns (>= 16)");
        cmd->add_flag("--force", force, "proceed past validation warnings");
        cmd->add_flag("--decimal", decimal, "add rounded decimal renditions of exact values");
    };

    CLI::App* artin = app.add_subcommand("artin", "derive and validate the rank-1 numerator polynomial");
    add_common(artin, true);

    CLI::App* invariants = app.add_subcommand("invariants", "mass invariants for n = 1..n_max");
    add_common(invariants, true);
    invariants->add_option("--n-max", n_max, "largest rank")->required();

    CLI::App* zeta_poly = app.add_subcommand("zeta-poly", "rank-n zeta numerator with structural checks");
    add_common(zeta_poly, true);
    zeta_poly->add_option("--n", n, "rank")->required();

    CLI::App* rh_check = app.add_subcommand("rh-check", "exact Riemann-hypothesis verdicts");
    add_common(rh_check, true);
    rh_check->add_option("--n", n, "single rank");
    rh_check->add_option("--n-max", n_max, "check ranks 1..n_max");

    CLI::App* asymptotics = app.add_subcommand("asymptotics", "residual convergence table (CSV)");
    add_common(asymptotics, true);
    asymptotics->add_option("--n-max", n_max, "largest rank (>= 3)")->required();
    asymptotics->add_option("--output", output, "write to a file instead of stdout");

    CLI::App* su_verify = app.add_subcommand("su-verify", "crosscheck the rank-1 decomposition against assembly");
    add_common(su_verify, true);
    su_verify->add_option("--n", n, "single rank");
    su_verify->add_option("--n-max", n_max, "check ranks 1..n_max (default 4)");
    su_verify->add_option("--samples", samples, "sample points per rank");
    su_verify->add_option("--su-bound", su_bound, "largest rank allowed (cost doubles per rank)");

    CLI::App* selftest = app.add_subcommand("selftest", "run the built-in property suite");
    add_common(selftest, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    if (precision < 16) die("precision must be at least 16");
    const bool want_json = format == "json";
    const bool want_csv = format == "csv";
    const int decimal_digits = decimal ? precision : 0;

    auto emit = [&](const std::string& text, void (*pretty)(const json&)) {
        if (want_json) std::cout << text;
        else pretty(json::parse(text));
    };

    if (artin->parsed()) {
        if (want_csv) die("csv output is only available for asymptotics");
        CurveGuard c{open_curve(curve_arg, precision, force, false)};
        StringGuard s;
        die_on(rz_artin_report(c.value, precision, &s.value));
        emit(s.value, pretty_artin);
        return kExitOk;
    }

    if (invariants->parsed()) {
        if (want_csv) die("csv output is only available for asymptotics");
        if (n_max < 1) die("--n-max must be >= 1");
        CurveGuard c{open_curve(curve_arg, precision, force, true)};
        StringGuard s;
        die_on(rz_invariants_report(c.value, n_max, decimal_digits, &s.value));
        emit(s.value, pretty_invariants);
        return kExitOk;
    }

    if (zeta_poly->parsed()) {
        if (want_csv) die("csv output is only available for asymptotics");
        if (n < 1) die("--n must be >= 1");
        CurveGuard c{open_curve(curve_arg, precision, force, true)};
        StringGuard s;
        die_on(rz_zeta_poly_report(c.value, n, decimal_digits, &s.value));
        emit(s.value, pretty_zeta_poly);
        json doc = json::parse(std::string(s.value));
        bool ok = doc["functional_equation"].get<bool>() && doc["residues"].get<bool>();
        return ok ? kExitOk : kExitCheckFailure;
    }

    if (rh_check->parsed()) {
        if (want_csv) die("csv output is only available for asymptotics");
        int lo = 1, hi = 0;
        if (n >= 1 && n_max >= 1) die("pass exactly one of --n / --n-max");
        if (n >= 1) lo = hi = n;
        else if (n_max >= 1) hi = n_max;
        else die("pass one of --n / --n-max");
        CurveGuard c{open_curve(curve_arg, precision, force, true)};
        StringGuard s;
        die_on(rz_rh_report(c.value, lo, hi, precision, &s.value));
        emit(s.value, pretty_rh);
        json doc = json::parse(std::string(s.value));
        return doc["any_fails"].get<bool>() ? kExitCheckFailure : kExitOk;
    }

    if (asymptotics->parsed()) {
        CurveGuard c{open_curve(curve_arg, precision, force, true)};
        StringGuard s;
        std::string text;
        if (want_json) {
            die_on(rz_asymptotics_json(c.value, n_max, precision, &s.value));
            text = s.value;
        } else {
            die_on(rz_asymptotics_csv(c.value, n_max, precision, decimal_digits, &s.value));
            text = s.value;
        }
        if (!output.empty()) {
            std::ofstream out(output, std::ios::binary);
            if (!out) die("cannot write " + output);
            out << text;
        } else {
            std::cout << text;
        }
        return kExitOk;
    }

    if (su_verify->parsed()) {
        if (want_csv) die("csv output is only available for asymptotics");
        if (n >= 1 && n_max >= 1) die("pass at most one of --n / --n-max");
        if (samples < 1) die("--samples must be >= 1");
        const int top = (n >= 1) ? n : (n_max >= 1 ? n_max : 4);
        if (top > su_bound)
            die("rank " + std::to_string(top) + " exceeds --su-bound " + std::to_string(su_bound));
        CurveGuard c{open_curve(curve_arg, precision, force, true)};
        StringGuard s;
        if (n >= 1) die_on(rz_su_report(c.value, n, samples, &s.value));
        else die_on(rz_su_report_range(c.value, top, samples, &s.value));
        emit(s.value, pretty_su);
        json doc = json::parse(std::string(s.value));
        bool ok = true;
        if (doc.contains("all_equal")) ok = doc["all_equal"].get<bool>();
        else
            for (const auto& smp : doc["samples"]) ok = ok && smp["equal"].get<bool>();
        return ok ? kExitOk : kExitCheckFailure;
    }

    if (selftest->parsed()) {
        if (want_csv) die("csv output is only available for asymptotics");
        StringGuard s;
        int all_pass = 0;
        die_on(rz_selftest_run(&s.value, &all_pass));
        emit(s.value, pretty_selftest);
        return all_pass ? kExitOk : kExitCheckFailure;
    }

    return kExitUsage;
}
