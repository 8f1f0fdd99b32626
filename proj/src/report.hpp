#pragma once

#include <string>

#include "curve.hpp"
#include "invariants.hpp"
#include "rh.hpp"
#include "su.hpp"

namespace rz {

// JSON documents for the C boundary. Deterministic: object keys are emitted
// sorted, exact values as "num/den" strings.
std::string artin_report_json(const CurveDatum& c, int precision_digits);
std::string invariants_report_json(const InvariantTable& t, int n_max, int decimal_digits);
std::string zeta_poly_report_json(const InvariantTable& t, int n, int decimal_digits);
std::string rh_report_json(const InvariantTable& t, int n_lo, int n_hi, int precision_digits);
std::string asymptotics_json(const InvariantTable& t, int n_max, int precision_digits);
std::string su_report_json(const InvariantTable& t, int n, int samples);
std::string su_report_range_json(const InvariantTable& t, int n_max, int samples);

CurveDatum curve_from_json_text(const std::string& text);

} // namespace rz
