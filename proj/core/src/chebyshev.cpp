#include "ccf/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "ccf/errors.hpp"

namespace ccf {

namespace {

// T_j^(k)(t) at t = +-1: (+-1)^{j+k} prod_{i=0}^{k-1} (j^2 - i^2)/(2i + 1).
double cheb_endpoint_derivative(int j, int k, int sign) {
    double prod = 1.0;
    for (int i = 0; i < k; ++i)
        prod *= (double(j) * j - double(i) * i) / (2.0 * i + 1.0);
    return ((j + k) % 2 == 0 || sign > 0) ? prod : -prod;
}

// dense LU with partial pivoting; returns false when a pivot collapses
bool lu_solve(std::vector<double>& A, std::vector<double>& x, int n, double& cond_est) {
    std::vector<int> piv(n);
    double dmax = 0.0, dmin = std::numeric_limits<double>::infinity();
    for (int col = 0; col < n; ++col) {
        int p = col;
        for (int r = col + 1; r < n; ++r)
            if (std::fabs(A[r * n + col]) > std::fabs(A[p * n + col])) p = r;
        piv[col] = p;
        if (p != col) {
            for (int c = 0; c < n; ++c) std::swap(A[col * n + c], A[p * n + c]);
            std::swap(x[col], x[p]);
        }
        double d = A[col * n + col];
        if (d == 0.0) return false;
        dmax = std::max(dmax, std::fabs(d));
        dmin = std::min(dmin, std::fabs(d));
        for (int r = col + 1; r < n; ++r) {
            double f = A[r * n + col] / d;
            if (f == 0.0) continue;
            A[r * n + col] = 0.0;
            for (int c = col + 1; c < n; ++c) A[r * n + c] -= f * A[col * n + c];
            x[r] -= f * x[col];
        }
    }
    for (int r = n - 1; r >= 0; --r) {
        double s = x[r];
        for (int c = r + 1; c < n; ++c) s -= A[r * n + c] * x[c];
        x[r] = s / A[r * n + r];
    }
    cond_est = dmax / dmin;
    return true;
}

} // namespace

std::vector<double> cc_points(int N, double b) {
    if (N < 1) throw DomainError("cc_points: requires N >= 1");
    if (!(b > 0)) throw DomainError("cc_points: requires b > 0");
    std::vector<double> x(static_cast<size_t>(N) + 1);
    for (int k = 0; k <= N; ++k)
        x[k] = b / 2 + (b / 2) * std::cos(k * M_PI / N);
    x[N] = 0.0; // cos(pi) exactly
    return x;
}

ChebInterp cheb_fit(std::span<const double> samples, double b) {
    int N = static_cast<int>(samples.size()) - 1;
    if (N < 1) throw DomainError("cheb_fit: needs at least two samples");
    if (!(b > 0)) throw DomainError("cheb_fit: requires b > 0");
    ChebInterp out{b, N, std::vector<double>(static_cast<size_t>(N) + 1)};
    // type-I DCT, direct cosine sums (N <= 1024 everywhere in this library)
    for (int j = 0; j <= N; ++j) {
        double acc = 0.5 * (samples[0] + (j % 2 == 0 ? samples[N] : -samples[N]));
        for (int k = 1; k < N; ++k)
            acc += samples[k] * std::cos(j * k * M_PI / N);
        double aj = 2.0 * acc / N;
        out.coeffs[j] = (j == 0 || j == N) ? aj / 2 : aj; // fold the double prime
    }
    return out;
}

double cheb_eval(std::span<const double> coeffs, double b, double x) {
    if (x < -1e-12 * b || x > b * (1 + 1e-12))
        throw DomainError("cheb_eval: x outside [0, b]");
    double t = 2 * x / b - 1;
    if (t > 1) t = 1;
    if (t < -1) t = -1;
    double u1 = 0.0, u2 = 0.0;
    for (size_t j = coeffs.size(); j-- > 1;) {
        double u = 2 * t * u1 - u2 + coeffs[j];
        u2 = u1;
        u1 = u;
    }
    return t * u1 - u2 + coeffs[0];
}

double cheb_eval(const ChebInterp& p, double x) { return cheb_eval(p.coeffs, p.b, x); }
double cheb_eval(const HermiteInterp& p, double x) { return cheb_eval(p.coeffs, p.b, x); }

std::vector<double> cheb_derivative(std::span<const double> coeffs, double b) {
    int n = static_cast<int>(coeffs.size()) - 1;
    std::vector<double> d(std::max(n, 1), 0.0);
    if (n <= 0) return d;
    // d_{k} = d_{k+2} + 2 (k+1) c_{k+1}, then halve d_0 and apply the chain factor
    std::vector<double> full(static_cast<size_t>(n) + 2, 0.0);
    for (int k = n - 1; k >= 0; --k)
        full[k] = full[k + 2] + 2.0 * (k + 1) * coeffs[k + 1];
    full[0] /= 2;
    for (int k = 0; k < n; ++k) d[k] = full[k] * (2.0 / b);
    return d;
}

HermiteInterp hermite_fit(std::span<const double> samples,
                          std::span<const double> derivs0,
                          std::span<const double> derivsb,
                          int N, int s, double b) {
    if (N < 2) throw DomainError("hermite_fit: requires N >= 2");
    if (s < 0) throw DomainError("hermite_fit: requires s >= 0");
    if (!(b > 0)) throw DomainError("hermite_fit: requires b > 0");
    if (static_cast<int>(samples.size()) != N + 1)
        throw DomainError("hermite_fit: samples must hold N+1 values at the Clenshaw-Curtis nodes");
    if (static_cast<int>(derivs0.size()) != s + 1 || static_cast<int>(derivsb.size()) != s + 1)
        throw DomainError("hermite_fit: derivative arrays must have length s+1");

    int n = N + 2 * s + 1;
    std::vector<double> A(static_cast<size_t>(n) * n, 0.0);
    std::vector<double> rhs(static_cast<size_t>(n), 0.0);
    int row = 0;
    // interior node values; nodes are descending, t_k = cos(k pi / N)
    for (int k = 1; k < N; ++k, ++row) {
        double t = std::cos(k * M_PI / N);
        for (int j = 0; j < n; ++j) A[row * n + j] = std::cos(j * std::acos(t));
        rhs[row] = samples[k];
    }
    // endpoint derivative conditions, orders 0..s at x=b (t=+1) and x=0 (t=-1)
    double chain = 2.0 / b;
    for (int k = 0; k <= s; ++k) {
        double ck = std::pow(chain, k);
        for (int j = 0; j < n; ++j) A[row * n + j] = ck * cheb_endpoint_derivative(j, k, +1);
        rhs[row++] = derivsb[k];
        for (int j = 0; j < n; ++j) A[row * n + j] = ck * cheb_endpoint_derivative(j, k, -1);
        rhs[row++] = derivs0[k];
    }

    HermiteInterp out{b, N, s, {}, 1.0};
    if (!lu_solve(A, rhs, n, out.cond_estimate)) {
        std::ostringstream msg;
        msg << "hermite_fit: singular collocation system (N=" << N << ", s=" << s
            << ", cond>=" << out.cond_estimate << ")";
        throw SingularSystemError(msg.str());
    }
    out.coeffs = std::move(rhs);
    return out;
}

} // namespace ccf
