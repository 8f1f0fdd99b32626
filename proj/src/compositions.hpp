#pragma once

#include <functional>
#include <vector>

#include "curve.hpp"
#include "rational.hpp"

namespace rz {

/* Lexicographic enumeration of the 2^{n-1} ordered compositions of n.
 *
 *   for (CompositionEnum e(n); !e.done(); e.next()) use(e.parts());
 */
class CompositionEnum {
public:
    explicit CompositionEnum(int n);
    const std::vector<int>& parts() const { return parts_; }
    bool done() const { return done_; }
    void next();

private:
    std::vector<int> parts_;
    bool done_;
};

enum class Boundary { none, first_exponent, last_exponent };
enum class SignMode { alternating, absorbed };

/* Weighting of one composition c_1..c_k in a mass sum.
 *
 * Base term: prod_j v_hat(c_j) over the adjacent-pair denominators chosen by
 * sign_mode: alternating contributes (-1)^{k-1} with denominators
 * (q^{c_j+c_{j+1}} - 1); absorbed uses (1 - q^{c_j+c_{j+1}}) and no sign.
 *
 * boundary multiplies by q^{scale * c_1 + offset} (first_exponent) or
 * q^{scale * c_k + offset} (last_exponent).
 *
 * fractional_d multiplies the j-th adjacent factor by
 * q^{(c_j + c_{j+1}) * frac(d s_j / n)}, s_j the j-th partial sum. The
 * per-term total of these exponents is asserted to be a nonnegative integer.
 * Only valid with the alternating convention unless d = 0.
 */
struct WeightSpec {
    Boundary boundary = Boundary::none;
    long boundary_scale = 0;
    long boundary_offset = 0;
    long fractional_d = 0;
    SignMode sign_mode = SignMode::absorbed;
};

Rational mass_sum_bruteforce(const CurveDatum& c, int n, const WeightSpec& w);
Rational mass_sum_dp(const CurveDatum& c, int n, const WeightSpec& w);

/* Generic core shared by the WeightSpec sums above and the special-uniformity
 * bracket factors: arbitrary rational multipliers attached to the first and
 * last part. Null functions mean weight 1.
 */
struct SumOptions {
    long fractional_d = 0;
    bool alternating = false;
    std::function<Rational(int)> first;
    std::function<Rational(int)> last;
};

Rational weighted_sum_bruteforce(const CurveDatum& c, int n, const SumOptions& w);
Rational weighted_sum_dp(const CurveDatum& c, int n, const SumOptions& w);

} // namespace rz
