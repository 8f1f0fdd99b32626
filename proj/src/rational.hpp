#pragma once

#include <gmpxx.h>

#include <string>

#include "error.hpp"

namespace rz {

using Int = mpz_class;
using Rational = mpq_class;

inline Int ipow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// q^e for any integer e, exact.
inline Rational qpow(const Int& q, long e) {
    if (e >= 0) return Rational(ipow(q, static_cast<unsigned long>(e)));
    Rational r(Int(1), ipow(q, static_cast<unsigned long>(-e)));
    r.canonicalize();
    return r;
}

inline Int binom(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Rational make_rational(const Int& num, const Int& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// "num/den" with the denominator elided when 1.
inline std::string to_string(const Rational& r) {
    return r.get_str();
}

inline std::string to_string(const Int& z) {
    return z.get_str();
}

inline bool is_integer(const Rational& r) {
    return r.get_den() == 1;
}

} // namespace rz
