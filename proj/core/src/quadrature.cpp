#include "ccf/quadrature.hpp"

#include <cmath>

#include "ccf/chebyshev.hpp"
#include "ccf/errors.hpp"

namespace ccf {

void validate(const IntegralSpec& spec) {
    if (!(spec.b > 0)) throw DomainError("IntegralSpec: requires b > 0");
    if (!(spec.alpha > -1)) throw DomainError("IntegralSpec: requires alpha > -1");
    if (!(spec.m > -1)) throw DomainError("IntegralSpec: requires m > -1");
    if (!(spec.m + spec.alpha > -1)) throw DomainError("IntegralSpec: requires m + alpha > -1");
    if (!(spec.omega > 0)) throw DomainError("IntegralSpec: requires omega > 0");
}

namespace {

// value = b^{a+1} sum_j c_j M_j (plain) or b^{a+1} sum_j c_j (ln(b) M_j + Mt_j)
QuadratureResult assemble(const IntegralSpec& spec, std::span<const double> coeffs) {
    int top = static_cast<int>(coeffs.size()) - 1;
    MomentParams mp{spec.b * spec.omega, spec.m, spec.alpha};
    bool log_kernel = spec.kernel == Kernel::Log;
    MomentTable table = compute_moments(mp, top, log_kernel);

    double logb = log_kernel ? std::log(spec.b) : 0.0;
    double acc = 0.0;
    for (int j = 0; j <= top; ++j) {
        double w = log_kernel ? logb * table.M[j] + (*table.Mlog)[j] : table.M[j];
        acc += coeffs[j] * w;
    }
    QuadratureResult out;
    out.value = std::pow(spec.b, spec.alpha + 1) * acc;
    out.moment_regime = table.regime;
    out.residual = table.residual;
    if (out.residual > 1e-9)
        throw ConvergenceError("ccf: moment recurrence residual above 1e-9");
    return out;
}

} // namespace

QuadratureResult ccf(const IntegralSpec& spec, std::span<const double> f_samples, int N) {
    validate(spec);
    if (N < 1) throw DomainError("ccf: requires N >= 1");
    if (static_cast<int>(f_samples.size()) != N + 1)
        throw DomainError("ccf: expected N+1 samples in cc_points order");
    ChebInterp interp = cheb_fit(f_samples, spec.b);
    QuadratureResult out = assemble(spec, interp.coeffs);
    out.N_used = N;
    out.s_used = 0;
    out.cond_estimate = 1.0;
    return out;
}

QuadratureResult hccf(const IntegralSpec& spec, std::span<const double> f_samples,
                      std::span<const double> derivs0, std::span<const double> derivsb,
                      int N, int s) {
    validate(spec);
    if (s < 0) throw DomainError("hccf: requires s >= 0");
    HermiteInterp interp = hermite_fit(f_samples, derivs0, derivsb, N, s, spec.b);
    QuadratureResult out = assemble(spec, interp.coeffs);
    out.N_used = N;
    out.s_used = s;
    out.cond_estimate = interp.cond_estimate;
    return out;
}

QuadratureResult ccf_auto(const IntegralSpec& spec,
                          const std::function<double(double)>& f,
                          double target_tol) {
    validate(spec);
    if (!(target_tol >= 1e-12)) throw DomainError("ccf_auto: requires target_tol >= 1e-12");
    QuadratureResult prev{};
    bool have_prev = false;
    for (int N = 8; N <= 1024; N *= 2) {
        std::vector<double> nodes = cc_points(N, spec.b);
        std::vector<double> samples(nodes.size());
        for (size_t i = 0; i < nodes.size(); ++i) samples[i] = f(nodes[i]);
        QuadratureResult cur = ccf(spec, samples, N);
        if (have_prev) {
            double delta = std::fabs(cur.value - prev.value);
            cur.auto_delta = delta;
            if (delta <= target_tol * std::max(1.0, std::fabs(cur.value))) return cur;
        }
        prev = cur;
        have_prev = true;
    }
    throw ConvergenceError("ccf_auto: did not converge by N = 1024");
}

} // namespace ccf
