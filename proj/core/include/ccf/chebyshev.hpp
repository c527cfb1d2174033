#pragma once

#include <span>
#include <vector>

namespace ccf {

/// Clenshaw-Curtis points x_k = b/2 + (b/2) cos(k pi / N), k = 0..N,
/// descending from b to 0. Requires N >= 1, b > 0.
std::vector<double> cc_points(int N, double b);

/// Chebyshev series of the degree-N interpolant on [0, b]. The stored
/// coefficients already fold the double-prime halving of the first and last
/// coefficient, so P(x) = sum_j coeffs[j] T_j(2x/b - 1) as a plain sum.
struct ChebInterp {
    double b = 1;
    int N = 0;
    std::vector<double> coeffs; // size N+1
};

/// Chebyshev series of the confluent interpolant of degree N + 2s that also
/// matches derivatives of orders 0..s at both endpoints. Plain (unhalved)
/// coefficients.
struct HermiteInterp {
    double b = 1;
    int N = 0;
    int s = 0;
    std::vector<double> coeffs;    // size N+2s+1
    double cond_estimate = 1.0;    // diag(U) ratio from the collocation solve
};

/// Interpolate samples taken at cc_points(N, b), in that node order.
ChebInterp cheb_fit(std::span<const double> samples, double b);

/// Evaluate a plain Chebyshev sum sum_j c_j T_j(2x/b - 1) by the Clenshaw
/// recurrence. Requires 0 <= x <= b.
double cheb_eval(std::span<const double> coeffs, double b, double x);
double cheb_eval(const ChebInterp& p, double x);
double cheb_eval(const HermiteInterp& p, double x);

/// Coefficients of the derivative series on [0, b] (includes the 2/b chain
/// factor). Plain-sum convention in and out.
std::vector<double> cheb_derivative(std::span<const double> coeffs, double b);

/// Confluent interpolant: values at the interior Clenshaw-Curtis nodes plus
/// derivatives of orders 0..s at x = 0 and x = b (arrays of length s+1, the
/// order-0 entries subsume the endpoint node conditions). Requires N >= 2,
/// s >= 0. s = 0 reproduces plain interpolation.
HermiteInterp hermite_fit(std::span<const double> samples,
                          std::span<const double> derivs0,
                          std::span<const double> derivsb,
                          int N, int s, double b);

} // namespace ccf
