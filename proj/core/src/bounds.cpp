#include "ccf/bounds.hpp"

#include <cmath>
#include <limits>

#include "ccf/chebyshev.hpp"
#include "ccf/errors.hpp"

namespace ccf {

double interp_error_bound(const AnalyticityInfo& info, int N, int n) {
    if (!(info.rho > 1)) throw DomainError("interp_error_bound: requires rho > 1");
    if (!(info.M_bound > 0)) throw DomainError("interp_error_bound: requires M_bound > 0");
    if (N < 1 || n < 0) throw DomainError("interp_error_bound: requires N >= 1, n >= 0");
    double dfact = 1.0; // (2n-1)!!, with (-1)!! = 1
    for (int i = 1; i <= 2 * n - 1; i += 2) dfact *= i;
    double ratio = 2 * info.rho / ((info.rho - 1) * (info.rho - 1));
    double sum = 0.0;
    for (int j = 0; j <= n; ++j) sum += std::pow(ratio, n + 1 - j);
    double denom = std::pow(info.rho, N) - std::pow(info.rho, -N);
    double value = 2 * info.M_bound * std::pow(double(N) + 1, 2 * n) / (denom * dfact) * sum;
    if (!std::isfinite(value)) return std::numeric_limits<double>::infinity();
    return value;
}

double explicit_ccf_bound(const IntegralSpec& spec, double sup_err) {
    validate(spec);
    if (!(sup_err >= 0)) throw DomainError("explicit_ccf_bound: requires sup_err >= 0");
    double a = spec.alpha, b = spec.b;
    if (spec.kernel == Kernel::Plain)
        return std::pow(b, a + 1) / (a + 1) * sup_err;
    if (b <= 1)
        return std::pow(b, a + 1) * (1 - (a + 1) * std::log(b)) / ((a + 1) * (a + 1)) * sup_err;
    return (2 + std::pow(b, a + 1) * ((a + 1) * std::log(b) - 1)) / ((a + 1) * (a + 1)) * sup_err;
}

ErrorReport rate_predictor(const IntegralSpec& spec, RateMode mode, int k_or_s) {
    validate(spec);
    ErrorReport rep;
    double a = spec.alpha;
    bool log_kernel = spec.kernel == Kernel::Log;
    switch (mode) {
        case RateMode::FixedN_vs_Omega: {
            if (!(spec.omega >= 1))
                throw DomainError("rate_predictor: omega rates require omega >= 1");
            // weight-decay class C(omega)/omega; the log factor is kept at
            // alpha = 0 as the conservative reading of the boundary case
            rep.rate_omega = (a < 0) ? a + 2 : 2;
            rep.omega_log_factor = log_kernel && a <= 0;
            rep.basis_omega = log_kernel ? "log-kernel omega bound, fixed N"
                                         : "plain-kernel omega bound, fixed N";
            break;
        }
        case RateMode::FixedOmega_vs_N: {
            int k = k_or_s;
            if (k < 1) throw DomainError("rate_predictor: N rates require smoothness k >= 1");
            if (a < -0.5)
                rep.rate_N = k + 2 * a + 2;
            else
                rep.rate_N = k + 1;
            rep.N_log_factor = log_kernel && a <= -0.5;
            rep.basis_N = "bounded-variation N rate, fixed omega";
            break;
        }
        case RateMode::Hccf: {
            if (!(spec.omega >= 1))
                throw DomainError("rate_predictor: omega rates require omega >= 1");
            int s = k_or_s;
            if (s < 0) throw DomainError("rate_predictor: requires s >= 0");
            rep.rate_omega = ((a < 0) ? a + 1 : 1) + s + 1;
            rep.omega_log_factor = log_kernel && a <= 0;
            rep.basis_omega = "higher-order rule omega rate";
            break;
        }
    }
    return rep;
}

double measured_sup_error(const std::function<double(double)>& fn_exact,
                          std::span<const double> samples, double b, int n,
                          int grid_points) {
    ChebInterp interp = cheb_fit(samples, b);
    std::vector<double> coeffs = interp.coeffs;
    for (int i = 0; i < n; ++i) coeffs = cheb_derivative(coeffs, b);
    double sup = 0.0;
    for (int i = 0; i < grid_points; ++i) {
        double x = b * double(i) / (grid_points - 1);
        sup = std::max(sup, std::fabs(fn_exact(x) - cheb_eval(coeffs, b, x)));
    }
    return sup;
}

} // namespace ccf
