#pragma once

#include <optional>
#include <string>

#include "ccf/quadrature.hpp"

namespace ccf {

/// Analyticity data on the mapped interval [-1,1]: f analytic and bounded by
/// M_bound inside the Bernstein ellipse with semi-axis sum rho > 1.
struct AnalyticityInfo {
    double rho;
    double M_bound;
};

/// Computed error bound and predicted convergence-rate exponents.
struct ErrorReport {
    std::optional<double> explicit_bound; // rigorous, constant-free
    double rate_omega = 0;                // error = O(omega^-rate_omega)
    bool omega_log_factor = false;        // times (1 + ln omega)
    double rate_N = 0;                    // error = O(N^-rate_N)
    bool N_log_factor = false;            // times ln N
    std::string basis_bound;              // which inequality produced each field
    std::string basis_omega;
    std::string basis_N;
};

/// Interpolation error bound for the n-th derivative on [-1,1]:
///   2 M (N+1)^{2n} / ((rho^N - rho^-N) (2n-1)!!) * sum_{j=0}^n (2rho/(rho-1)^2)^{n+1-j}
/// with (-1)!! = 1. Returns +inf on overflow.
double interp_error_bound(const AnalyticityInfo& info, int N, int n);

/// Constant-free bound on |I - I_CCF| from the measured interpolation
/// sup-error: b^{a+1}/(a+1) * sup_err for the plain kernel; the b<=1 / b>1
/// log-weight pair for the log kernel.
double explicit_ccf_bound(const IntegralSpec& spec, double sup_err);

enum class RateMode { FixedN_vs_Omega, FixedOmega_vs_N, Hccf };

/// Predicted asymptotic exponents: in omega at fixed N (k_or_s unused), in N
/// at fixed omega (k_or_s = smoothness k), or the omega-rate gain of the
/// higher-order rule (k_or_s = s).
ErrorReport rate_predictor(const IntegralSpec& spec, RateMode mode, int k_or_s = 0);

/// Sup-norm of f^(n) - P_N^(n) f on [0,b] measured on a uniform grid
/// (default 2001 points), for feeding explicit_ccf_bound. fn_exact must
/// evaluate the n-th derivative of the sampled function.
double measured_sup_error(const std::function<double(double)>& fn_exact,
                          std::span<const double> samples, double b, int n,
                          int grid_points = 2001);

} // namespace ccf
