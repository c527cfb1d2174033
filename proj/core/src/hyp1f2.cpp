#include "ccf/special_functions.hpp"

#include <cmath>

#include "ccf/errors.hpp"
#include "internal.hpp"

namespace ccf {

namespace {

using detail::DD;
using detail::f128;

void check_params(double b, double c) {
    if (detail::pole_distance(b) < 1e-8 || detail::pole_distance(c) < 1e-8)
        throw PoleError("hyp1f2: denominator parameter within 1e-8 of a non-positive integer");
}

// Summation core. With which != nullptr it accumulates the term-wise
// parameter derivative through a value/derivative pair recurrence, which
// stays finite when a Pochhammer factor crosses zero.
SeriesResult sum_series(double a, double b, double c, double z,
                        const Hyp1F2Param* which, const SeriesConfig& cfg) {
    check_params(b, c);
    SeriesResult out;
    DD t{f128(1)};       // current term of 1F2
    DD td{};             // d(term)/d(param)
    DD sum = which ? td : t;
    f128 abs_sum = 1;    // sum of |terms| actually accumulated (cancellation track)
    if (which) abs_sum = 0;

    int below = 0;
    int k = 0;
    for (; k < cfg.max_terms; ++k) {
        f128 fa = f128(a) + k, fb = f128(b) + k, fc = f128(c) + k, fk = f128(k) + 1;
        f128 denom = fb * fc * fk;
        if (which) {
            switch (*which) {
                case Hyp1F2Param::A:
                    td = dd_add(dd_mul_f(td, fa), t);
                    td = dd_mul_f(td, f128(z));
                    td = dd_div_f(td, denom);
                    break;
                case Hyp1F2Param::B:
                    td = dd_sub(td, dd_div_f(t, fb));
                    td = dd_mul_f(td, fa * f128(z));
                    td = dd_div_f(td, denom);
                    break;
                case Hyp1F2Param::C:
                    td = dd_sub(td, dd_div_f(t, fc));
                    td = dd_mul_f(td, fa * f128(z));
                    td = dd_div_f(td, denom);
                    break;
            }
        }
        t = dd_mul_f(t, fa * f128(z));
        t = dd_div_f(t, denom);
        const DD& add = which ? td : t;
        sum = dd_add(sum, add);
        abs_sum += detail::dd_abs_hi(add);

        double tail = std::fabs(add.to_double());
        double cur = std::fabs(sum.to_double());
        out.tail_estimate = tail;
        if (tail <= cfg.rel_tol * cur + cfg.abs_tol) {
            if (++below >= 2) {
                out.converged = true;
                ++k;
                break;
            }
        } else {
            below = 0;
        }
    }
    out.terms_used = k;
    out.value = sum.to_double();
    // the pair carries ~68 digits; flag results whose alternating-sum
    // cancellation ate through that budget
    double loss = static_cast<double>(abs_sum) * 1e-65;
    if (loss > cfg.rel_tol * std::fabs(out.value) + cfg.abs_tol) out.converged = false;
    if (k >= cfg.max_terms) out.converged = false;
    return out;
}

} // namespace

SeriesResult hyp1f2(double a, double b, double c, double z, const SeriesConfig& cfg) {
    if (z == 0.0) return {1.0, 0, true, 0.0};
    return sum_series(a, b, c, z, nullptr, cfg);
}

SeriesResult hyp1f2_dparam(double a, double b, double c, double z,
                           Hyp1F2Param which, const SeriesConfig& cfg) {
    if (z == 0.0) {
        check_params(b, c);
        return {0.0, 0, true, 0.0};
    }
    return sum_series(a, b, c, z, &which, cfg);
}

} // namespace ccf
