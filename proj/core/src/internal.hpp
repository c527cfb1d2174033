#pragma once

// Declarations shared between the special-function translation units.

#include "dd128.hpp"

namespace ccf::detail {

// sin(pi x), cos(pi x) with exact argument reduction at integers/half-integers.
double sin_pi(double x);
double cos_pi(double x);

// log Gamma(z) for z > 0 (Stirling with upward shift).
double lgamma_pos(double z);

// 1/Gamma(x) and its derivative, finite for every real x (zero at the poles).
double rgamma(double x);
double drgamma(double x);

// distance from x to the nearest non-positive integer (+inf if x > 0.5).
double pole_distance(double x);

// J_nu(x) for any real order (reflection below nu = -1); internal superset
// of the public bessel_j contract.
double bessel_j_any(double nu, double x);

// power series in pair precision; cross-check representation, and the
// engine behind the small-x Y path. Valid for x <= ~110.
DD bessel_j_series_dd(double nu, double x);

// J_{nu0+k}(x), k = 0..count-1, by Miller's downward recurrence with the
// Neumann-series normalization; nu0 in [0,1), x > 0.
void miller_sequence(double nu0, int count, double x, double* out);

// Hankel asymptotic J and Y; trustworthy for x >= max(20, 5 nu).
void hankel_jy(double nu, double x, double& J, double& Y);

} // namespace ccf::detail
