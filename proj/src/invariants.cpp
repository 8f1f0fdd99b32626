#include "invariants.hpp"

namespace rz {

namespace {

long floor_mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace

Rational InvariantTable::beta_hat_zero(int n) const {
    if (n < 1) fail(RZ_ERR_INVALID_ARGUMENT, "beta_hat_zero needs n >= 1");
    std::lock_guard<std::mutex> lock(mu_);
    auto it = bh0_.find(n);
    if (it != bh0_.end()) return it->second;
    WeightSpec w; // plain absorbed d = 0 sum
    Rational v = mass_sum_dp(curve_, n, w);
    bh0_.emplace(n, v);
    return v;
}

Rational InvariantTable::beta_hat_d(int n, long d) const {
    if (n < 1) fail(RZ_ERR_INVALID_ARGUMENT, "beta_hat_d needs n >= 1");
    const long dm = floor_mod(d, n);
    if (dm == 0) return beta_hat_zero(n);
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_pair(n, dm);
    auto it = bhd_.find(key);
    if (it != bhd_.end()) return it->second;
    WeightSpec w;
    w.fractional_d = dm;
    w.sign_mode = SignMode::alternating;
    Rational v = mass_sum_dp(curve_, n, w);
    bhd_.emplace(key, v);
    return v;
}

Rational InvariantTable::mass_first(int n) const {
    if (n < 1) fail(RZ_ERR_INVALID_ARGUMENT, "mass_first needs n >= 1");
    std::lock_guard<std::mutex> lock(mu_);
    auto it = mfirst_.find(n);
    if (it != mfirst_.end()) return it->second;
    WeightSpec w;
    w.boundary = Boundary::first_exponent;
    w.boundary_scale = 1;
    w.boundary_offset = 1;
    Rational v = mass_sum_dp(curve_, n, w);
    mfirst_.emplace(n, v);
    return v;
}

Rational InvariantTable::mass_last(int n) const {
    if (n < 1) fail(RZ_ERR_INVALID_ARGUMENT, "mass_last needs n >= 1");
    std::lock_guard<std::mutex> lock(mu_);
    auto it = mlast_.find(n);
    if (it != mlast_.end()) return it->second;
    WeightSpec w;
    w.boundary = Boundary::last_exponent;
    w.boundary_scale = -1;
    w.boundary_offset = 0;
    Rational v = mass_sum_dp(curve_, n, w);
    mlast_.emplace(n, v);
    return v;
}

Rational InvariantTable::beta_zero(int n) const {
    const int g = curve_.genus();
    long e = static_cast<long>(g - 1) * n * (n - 1) / 2;
    return qpow(curve_.q(), e) * beta_hat_zero(n);
}

Rational InvariantTable::alpha_zero(int n) const {
    if (n < 1) fail(RZ_ERR_INVALID_ARGUMENT, "alpha_zero needs n >= 1");
    if (n == 1) return Rational(1);
    long e = static_cast<long>(n - 1) * (curve_.genus() - 1);
    return qpow(curve_.q(), e) * beta_zero(n - 1);
}

Rational InvariantTable::alpha_n_n(int n) const {
    if (curve_.genus() != 2)
        fail(RZ_ERR_UNSUPPORTED_GENUS, "the degree-n mass formula is only available for genus 2");
    if (n < 1) fail(RZ_ERR_INVALID_ARGUMENT, "alpha_n_n needs n >= 1");
    const Rational n1(curve_.point_counts()[0]);
    if (n == 1) return n1;
    Rational s = n1 * beta_hat_zero(n - 1);
    s += mass_first(n - 1);
    s -= mass_last(n - 1);
    for (int a = 2; a <= n - 1; ++a) s -= mass_last(n - a) * beta_hat_zero(a - 1);
    const long choose2 = static_cast<long>(n) * (n - 1) / 2;
    return qpow(curve_.q(), choose2) * s;
}

} // namespace rz
