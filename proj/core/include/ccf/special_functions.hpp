#pragma once

#include <vector>

namespace ccf {

/// Tolerances for series evaluation. tail_estimate of a converged series is
/// bounded by rel_tol * |value| + abs_tol.
struct SeriesConfig {
    double rel_tol = 1e-13;
    double abs_tol = 1e-300;
    int max_terms = 1'000'000;
};

struct SeriesResult {
    double value = 0;
    int terms_used = 0;
    bool converged = false;
    double tail_estimate = 0; // magnitude of the last added term
};

/// Gamma function for real z, z not within 1e-8 of {0, -1, -2, ...}.
/// Accurate to >= 12 significant digits for |z| <= 50.
double gamma_fn(double z);

/// Digamma psi_0(z) = Gamma'(z)/Gamma(z), same pole exclusion as gamma_fn.
double digamma(double z);

/// Bessel function of the first kind, real order nu > -1, x >= 0.
double bessel_j(double nu, double x);

/// Bessel function of the second kind, real order, x > 0.
double bessel_y(double nu, double x);

/// J_{nu0+k}(x) for k = 0..count-1 in one pass (downward recurrence where
/// that is the stable direction). Requires nu0 > -1, x > 0.
std::vector<double> bessel_j_sequence(double nu0, int count, double x);

enum class Hyp1F2Param { A, B, C };

/// Generalized hypergeometric 1F2(a; b, c; z), entire in z. Summed with
/// compensated extended-precision accumulation; results keep full double
/// accuracy for |z| <= 2500. Beyond that the converged flag reports the
/// precision loss of the alternating sum.
SeriesResult hyp1f2(double a, double b, double c, double z,
                    const SeriesConfig& cfg = {});

/// Term-wise derivative of hyp1f2 with respect to one parameter.
SeriesResult hyp1f2_dparam(double a, double b, double c, double z,
                           Hyp1F2Param which, const SeriesConfig& cfg = {});

/// Lommel function of the second kind S_{mu,nu}(z), z > 0, even in nu.
/// Small z uses the 1F2 closed form, large z the algebraic asymptotic
/// expansion truncated at its smallest term.
double lommel_s(double mu, double nu, double z, const SeriesConfig& cfg = {});

/// d/dmu S_{mu,nu}(z).
double lommel_s_dmu(double mu, double nu, double z,
                    const SeriesConfig& cfg = {});

} // namespace ccf
