#include "ccf/special_functions.hpp"

#include <cmath>
#include <limits>

#include "ccf/errors.hpp"
#include "internal.hpp"

namespace ccf {

namespace {

constexpr double kAsymSwitch = 50.0;

void check_small_z_poles(double mu, double nu) {
    // Gamma((mu -+ nu + 1)/2) factors are singular when mu +- nu is an odd
    // negative integer; the closed form is not continued through them.
    if (detail::pole_distance((mu - nu + 1) / 2) < 1e-8 ||
        detail::pole_distance((mu + nu + 1) / 2) < 1e-8)
        throw PoleError("lommel_s: mu +- nu within 1e-8 of an odd negative integer");
}

struct AsymEval {
    double value;
    double dvalue;     // derivative of the bracket sum w.r.t. mu
    double min_term;   // smallest bracket term magnitude (error estimate)
};

AsymEval lommel_asymptotic(double mu, double nu, double z, bool want_deriv) {
    double z2 = z * z;
    double c = 1.0, dc = 0.0;
    double sum = 1.0, dsum = 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (int p = 1; p <= 80; ++p) {
        double u = mu - 2 * p + 1;
        double f = -(u * u - nu * nu) / z2;
        double df = -2.0 * u / z2;
        double dc_next = dc * f + c * df;
        double c_next = c * f;
        double size = std::fabs(c_next) + (want_deriv ? std::fabs(dc_next) : 0.0);
        if (size >= best) break;
        best = size;
        c = c_next;
        dc = dc_next;
        sum += c;
        dsum += dc;
        if (size < 1e-40) break;
    }
    double zp = std::pow(z, mu - 1.0);
    return {zp * sum, zp * (std::log(z) * sum + dsum), best * zp};
}

} // namespace

double lommel_s(double mu, double nu, double z, const SeriesConfig& cfg) {
    if (!(z > 0.0)) throw DomainError("lommel_s: requires z > 0");
    nu = std::fabs(nu); // S_{mu,nu} is even in nu
    if (z >= kAsymSwitch) return lommel_asymptotic(mu, nu, z, false).value;

    check_small_z_poles(mu, nu);
    double D = (mu + 1.0) * (mu + 1.0) - nu * nu;
    SeriesResult F = hyp1f2(1.0, (mu - nu + 3) / 2, (mu + nu + 3) / 2, -z * z / 4, cfg);
    if (!F.converged) {
        AsymEval a = lommel_asymptotic(mu, nu, z, false);
        if (a.min_term <= cfg.rel_tol * std::fabs(a.value) + cfg.abs_tol) return a.value;
        throw ConvergenceError("lommel_s: neither branch reached the requested tolerance");
    }
    double s_small = std::pow(z, mu + 1.0) / D * F.value;
    double g1 = gamma_fn((mu - nu + 1) / 2), g2 = gamma_fn((mu + nu + 1) / 2);
    double J = detail::bessel_j_any(nu, z), Y = bessel_y(nu, z);
    double w = std::exp2(mu - 1.0) * g1 * g2 *
               (detail::sin_pi((mu - nu) / 2) * J - detail::cos_pi((mu - nu) / 2) * Y);
    return s_small + w;
}

double lommel_s_dmu(double mu, double nu, double z, const SeriesConfig& cfg) {
    if (!(z > 0.0)) throw DomainError("lommel_s_dmu: requires z > 0");
    nu = std::fabs(nu);
    if (z >= kAsymSwitch) return lommel_asymptotic(mu, nu, z, true).dvalue;

    check_small_z_poles(mu, nu);
    double D = (mu + 1.0) * (mu + 1.0) - nu * nu;
    double bq = (mu - nu + 3) / 2, cq = (mu + nu + 3) / 2, zz = -z * z / 4;
    SeriesResult F = hyp1f2(1.0, bq, cq, zz, cfg);
    SeriesResult Fb = hyp1f2_dparam(1.0, bq, cq, zz, Hyp1F2Param::B, cfg);
    SeriesResult Fc = hyp1f2_dparam(1.0, bq, cq, zz, Hyp1F2Param::C, cfg);
    if (!F.converged || !Fb.converged || !Fc.converged) {
        AsymEval a = lommel_asymptotic(mu, nu, z, true);
        if (a.min_term <= cfg.rel_tol * std::fabs(a.value) + cfg.abs_tol) return a.dvalue;
        throw ConvergenceError("lommel_s_dmu: neither branch reached the requested tolerance");
    }
    double zp = std::pow(z, mu + 1.0);
    double ds = std::log(z) * zp / D * F.value
              - zp * 2.0 * (mu + 1.0) / (D * D) * F.value
              + zp / D * 0.5 * (Fb.value + Fc.value);

    double g1 = gamma_fn((mu - nu + 1) / 2), g2 = gamma_fn((mu + nu + 1) / 2);
    double J = detail::bessel_j_any(nu, z), Y = bessel_y(nu, z);
    double sn = detail::sin_pi((mu - nu) / 2), cn = detail::cos_pi((mu - nu) / 2);
    double pref = std::exp2(mu - 1.0) * g1 * g2;
    double w = pref * (sn * J - cn * Y);
    double dw = w * (M_LN2 + 0.5 * digamma((mu - nu + 1) / 2) + 0.5 * digamma((mu + nu + 1) / 2))
              + pref * (M_PI / 2) * (cn * J + sn * Y);
    return ds + dw;
}

} // namespace ccf
