#include "compositions.hpp"

#include <map>

namespace rz {

CompositionEnum::CompositionEnum(int n) : done_(false) {
    if (n < 1) fail(RZ_ERR_INVALID_ARGUMENT, "compositions need n >= 1");
    parts_.assign(n, 1);
}

void CompositionEnum::next() {
    // successor of (c_1..c_k): bump c_{k-1}, respell c_k - 1 as trailing ones
    if (parts_.size() == 1) {
        done_ = true;
        return;
    }
    int last = parts_.back();
    parts_.pop_back();
    parts_.back() += 1;
    parts_.insert(parts_.end(), last - 1, 1);
}

namespace {

long floor_mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

// Accumulated fractional q-exponent of a partial composition, times n:
// along any path to partial sum s with last part l it equals
// d s (s - l) mod n, which is what makes the O(n^2)-state DP sound.
long slot(long d, long s, long l, long n) {
    return floor_mod(d * s % n * (s - l), n);
}

} // namespace

Rational weighted_sum_bruteforce(const CurveDatum& c, int n, const SumOptions& w) {
    if (n < 1) fail(RZ_ERR_INVALID_ARGUMENT, "mass sums need n >= 1");
    const Int& q = c.q();
    const long d = w.fractional_d ? floor_mod(w.fractional_d, n) : 0;
    Rational total(0);
    for (CompositionEnum e(n); !e.done(); e.next()) {
        const auto& parts = e.parts();
        const size_t k = parts.size();
        Rational term(1);
        for (int p : parts) term *= c.v_hat(p);
        long frac_num = 0; // total fractional exponent, times n
        long s = 0;
        for (size_t j = 0; j + 1 < k; ++j) {
            s += parts[j];
            const int e2 = parts[j] + parts[j + 1];
            if (w.alternating) term /= ipow(q, e2) - 1;
            else term /= 1 - ipow(q, e2);
            if (d) frac_num += e2 * ((d * s) % n);
        }
        if (w.alternating && k % 2 == 0) term = -term; // (-1)^{k-1}
        if (d) {
            if (frac_num % n != 0 || frac_num < 0)
                fail(RZ_ERR_NON_INTEGRAL_EXPONENT,
                     "total fractional exponent " + std::to_string(frac_num) + "/" + std::to_string(n) +
                         " is not a nonnegative integer");
            term *= qpow(q, frac_num / n);
        }
        if (w.first) term *= w.first(parts.front());
        if (w.last) term *= w.last(parts.back());
        total += term;
    }
    return total;
}

Rational weighted_sum_dp(const CurveDatum& c, int n, const SumOptions& w) {
    if (n < 1) fail(RZ_ERR_INVALID_ARGUMENT, "mass sums need n >= 1");
    const Int& q = c.q();
    const long d = w.fractional_d ? floor_mod(w.fractional_d, n) : 0;

    // dp[s][l]: sum of weighted partial terms with partial sum s, last part l.
    // The fractional exponent is implicit in (s, l) (see slot); transitions
    // carry its integer part into the value.
    std::vector<std::vector<Rational>> dp(n + 1);
    std::vector<std::vector<bool>> seen(n + 1);
    for (int s = 0; s <= n; ++s) {
        dp[s].assign(s + 1, Rational(0));
        seen[s].assign(s + 1, false);
    }
    for (int p = 1; p <= n; ++p) {
        Rational init = c.v_hat(p);
        if (w.first) init *= w.first(p);
        dp[p][p] = init;
        seen[p][p] = true;
    }
    for (int s = 1; s < n; ++s) {
        const long m = d ? (d * s) % n : 0;
        for (int l = 1; l <= s; ++l) {
            if (!seen[s][l]) continue;
            const long u = slot(d, s, l, n);
            for (int nxt = 1; nxt <= n - s; ++nxt) {
                const int e = l + nxt;
                Rational step = dp[s][l] * c.v_hat(nxt) / (1 - ipow(q, e));
                if (d) {
                    const long u2 = slot(d, s + nxt, nxt, n);
                    const long carry = e * m + u - u2;
                    if (carry % n != 0 || carry < 0)
                        fail(RZ_ERR_NON_INTEGRAL_EXPONENT, "fractional-exponent bookkeeping underflow");
                    if (carry) step *= qpow(q, carry / n);
                }
                dp[s + nxt][nxt] += step;
                seen[s + nxt][nxt] = true;
            }
        }
    }
    Rational total(0);
    for (int l = 1; l <= n; ++l) {
        if (!seen[n][l]) continue;
        Rational t = dp[n][l];
        if (w.last) t *= w.last(l);
        total += t;
    }
    return total;
}

namespace {

SumOptions to_options(const CurveDatum& c, const WeightSpec& w) {
    if (w.sign_mode == SignMode::absorbed && w.fractional_d != 0)
        fail(RZ_ERR_INVALID_ARGUMENT, "the absorbed sign convention requires fractional_d = 0");
    SumOptions opt;
    opt.fractional_d = w.fractional_d;
    opt.alternating = (w.sign_mode == SignMode::alternating);
    if (w.boundary == Boundary::first_exponent) {
        const Int q = c.q();
        const long scale = w.boundary_scale, offset = w.boundary_offset;
        opt.first = [q, scale, offset](int p) { return qpow(q, scale * p + offset); };
    } else if (w.boundary == Boundary::last_exponent) {
        const Int q = c.q();
        const long scale = w.boundary_scale, offset = w.boundary_offset;
        opt.last = [q, scale, offset](int p) { return qpow(q, scale * p + offset); };
    }
    return opt;
}

} // namespace

Rational mass_sum_bruteforce(const CurveDatum& c, int n, const WeightSpec& w) {
    return weighted_sum_bruteforce(c, n, to_options(c, w));
}

Rational mass_sum_dp(const CurveDatum& c, int n, const WeightSpec& w) {
    return weighted_sum_dp(c, n, to_options(c, w));
}

} // namespace rz
