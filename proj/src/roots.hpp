#pragma once

#include <vector>

#include "rational.hpp"

namespace rz {

struct Complex {
    mpf_class re, im;
};

mpf_class complex_abs(const Complex& z);

// All complex roots of sum_i coeffs[i] x^i (ascending, nonzero lead) by
// Durand-Kerner iteration at precision_digits decimal digits.
std::vector<Complex> poly_roots(const std::vector<Rational>& coeffs, int precision_digits);

// Significant-digit decimal rendition, e.g. "1.2345e-3".
std::string mpf_to_string(const mpf_class& x, int digits);

mp_bitcnt_t precision_bits(int decimal_digits);

} // namespace rz
