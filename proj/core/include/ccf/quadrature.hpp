#pragma once

#include <functional>
#include <span>

#include "ccf/moments.hpp"

namespace ccf {

/// One problem instance: I[f] = int_0^b x^alpha (ln x)? f(x) J_m(omega x) dx.
struct IntegralSpec {
    double b = 1;        // > 0
    double alpha = 0;    // > -1
    double m = 0;        // > -1, with m + alpha > -1
    double omega = 1;    // > 0; omega >= 1 required for the rate predictors
    Kernel kernel = Kernel::Plain;
};

struct QuadratureResult {
    double value = 0;
    int N_used = 0;
    int s_used = 0;                 // 0 for the plain rule
    MomentRegime moment_regime = MomentRegime::Forward;
    double residual = 0;            // moment recurrence residual
    double cond_estimate = 1.0;     // interpolant solve conditioning
    double auto_delta = 0;          // achieved |value(2N)-value(N)| in ccf_auto
};

void validate(const IntegralSpec& spec);

/// Clenshaw-Curtis-Filon rule: interpolate the N+1 samples (taken at
/// cc_points(N, b), descending order) and integrate the interpolant exactly
/// against the singular oscillatory weight via modified moments.
QuadratureResult ccf(const IntegralSpec& spec, std::span<const double> f_samples, int N);

/// Higher-order rule: the interpolant additionally matches derivatives of
/// orders 0..s at both endpoints (derivs0/derivsb of length s+1).
QuadratureResult hccf(const IntegralSpec& spec, std::span<const double> f_samples,
                      std::span<const double> derivs0, std::span<const double> derivsb,
                      int N, int s);

/// N-doubling driver from N = 8 up to N = 1024; stops when successive values
/// differ by at most target_tol * max(1, |value|).
QuadratureResult ccf_auto(const IntegralSpec& spec,
                          const std::function<double(double)>& f,
                          double target_tol);

} // namespace ccf
