#include "roots.hpp"

#include <algorithm>
#include <cstdio>
#include <cstring>

namespace rz {

mp_bitcnt_t precision_bits(int decimal_digits) {
    if (decimal_digits < 16) decimal_digits = 16;
    // ~3.33 bits per decimal digit plus guard bits
    return static_cast<mp_bitcnt_t>(decimal_digits * 10 / 3 + 64);
}

mpf_class complex_abs(const Complex& z) {
    mpf_class s = z.re * z.re + z.im * z.im;
    mpf_class r(0, s.get_prec());
    mpf_sqrt(r.get_mpf_t(), s.get_mpf_t());
    return r;
}

namespace {

Complex cmul(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Complex csub(const Complex& a, const Complex& b) {
    return {a.re - b.re, a.im - b.im};
}

Complex cdiv(const Complex& a, const Complex& b) {
    mpf_class d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

Complex horner(const std::vector<Complex>& c, const Complex& x) {
    Complex acc{mpf_class(0, x.re.get_prec()), mpf_class(0, x.re.get_prec())};
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = cmul(acc, x);
        acc.re += it->re;
        acc.im += it->im;
    }
    return acc;
}

} // namespace

std::vector<Complex> poly_roots(const std::vector<Rational>& coeffs, int precision_digits) {
    const mp_bitcnt_t prec = precision_bits(precision_digits);
    size_t deg = coeffs.size();
    while (deg > 0 && coeffs[deg - 1] == 0) --deg;
    if (deg < 2) return {};
    --deg; // degree of the polynomial

    // monic normalization in floating point
    mpf_class lead(0, prec);
    mpf_set_q(lead.get_mpf_t(), coeffs[deg].get_mpq_t());
    std::vector<Complex> c(deg + 1);
    mpf_class radius(1, prec);
    for (size_t i = 0; i <= deg; ++i) {
        mpf_class v(0, prec);
        mpf_set_q(v.get_mpf_t(), coeffs[i].get_mpq_t());
        c[i] = {v / lead, mpf_class(0, prec)};
        if (i < deg) {
            mpf_class m(0, prec);
            mpf_abs(m.get_mpf_t(), c[i].re.get_mpf_t());
            if (m > radius) radius = m;
        }
    }
    radius += 1; // Cauchy bound: all roots inside 1 + max |c_i|

    // seeds spread on a spiral inside the root bound
    std::vector<Complex> z(deg);
    Complex seed{mpf_class("0.4", prec), mpf_class("0.9", prec)};
    Complex cur = seed;
    for (size_t k = 0; k < deg; ++k) {
        z[k] = {cur.re * radius, cur.im * radius};
        cur = cmul(cur, seed);
    }

    mpf_class tol(1, prec);
    mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), prec - 16);
    tol *= radius;

    for (int iter = 0; iter < 2000; ++iter) {
        mpf_class max_step(0, prec);
        for (size_t k = 0; k < deg; ++k) {
            Complex denom{mpf_class(1, prec), mpf_class(0, prec)};
            for (size_t j = 0; j < deg; ++j) {
                if (j != k) denom = cmul(denom, csub(z[k], z[j]));
            }
            Complex step = cdiv(horner(c, z[k]), denom);
            z[k] = csub(z[k], step);
            mpf_class s = complex_abs(step);
            if (s > max_step) max_step = s;
        }
        if (max_step < tol) break;
    }
    return z;
}

std::string mpf_to_string(const mpf_class& x, int digits) {
    if (digits < 1) digits = 1;
    mp_exp_t exp10 = 0;
    char* raw = mpf_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), x.get_mpf_t());
    std::string mant(raw);
    std::free(raw);
    bool neg = !mant.empty() && mant[0] == '-';
    std::string body = neg ? mant.substr(1) : mant;
    if (body.empty()) return "0";
    std::string out = (neg ? "-" : "");
    out += body.substr(0, 1);
    if (body.size() > 1) out += "." + body.substr(1);
    out += "e" + std::to_string(exp10 - 1);
    return out;
}

} // namespace rz
