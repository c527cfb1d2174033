#include "ccf/special_functions.hpp"

#include <cmath>
#include <limits>

#include "ccf/errors.hpp"
#include "internal.hpp"

namespace ccf {
namespace detail {

namespace {

constexpr double kPoleExclusion = 1e-8;

// B_{2k} / (2k (2k-1)) for the Stirling series of log Gamma.
constexpr double kStirling[] = {
    1.0 / 12.0,     -1.0 / 360.0,      1.0 / 1260.0, -1.0 / 1680.0,
    1.0 / 1188.0,   -691.0 / 360360.0, 1.0 / 156.0,  -3617.0 / 122400.0,
};

// B_{2k} / (2k) for the digamma asymptotic series.
constexpr double kDigamma[] = {
    1.0 / 12.0,   -1.0 / 120.0,      1.0 / 252.0, -1.0 / 240.0,
    1.0 / 132.0,  -691.0 / 32760.0,  1.0 / 12.0,  -3617.0 / 8160.0,
};

constexpr double kHalfLog2Pi = 0.91893853320467274178;

} // namespace

double sin_pi(double x) {
    double n = std::nearbyint(x);
    double r = x - n;
    double s = std::sin(M_PI * r);
    return (std::fmod(std::fabs(n), 2.0) < 0.5) ? s : -s;
}

double cos_pi(double x) {
    double n = std::nearbyint(x);
    double r = x - n;
    double c = std::cos(M_PI * r);
    return (std::fmod(std::fabs(n), 2.0) < 0.5) ? c : -c;
}

double pole_distance(double x) {
    if (x > 0.5) return std::numeric_limits<double>::infinity();
    return std::fabs(x - std::nearbyint(x));
}

double lgamma_pos(double z) {
    // shift into the Stirling region
    double shift = 0.0;
    while (z < 10.0) {
        shift += std::log(z);
        z += 1.0;
    }
    double inv2 = 1.0 / (z * z);
    double series = 0.0, p = 1.0 / z;
    for (double c : kStirling) {
        series += c * p;
        p *= inv2;
    }
    return (z - 0.5) * std::log(z) - z + kHalfLog2Pi + series - shift;
}

double rgamma(double x) {
    if (x >= 0.5) return std::exp(-lgamma_pos(x));
    int q = static_cast<int>(std::ceil(0.5 - x));
    double prod = 1.0;
    for (int i = 0; i <= q; ++i) prod *= (x + i);
    return prod * rgamma(x + q + 1);
}

double drgamma(double x) {
    if (x >= 0.5) {
        double rg = rgamma(x);
        return -digamma(x) * rg;
    }
    int q = static_cast<int>(std::ceil(0.5 - x));
    double prod = 1.0, dprod = 0.0;
    for (int i = 0; i <= q; ++i) {
        dprod = dprod * (x + i) + prod;
        prod *= (x + i);
    }
    double y = x + q + 1;
    double rg = rgamma(y);
    return dprod * rg + prod * (-digamma(y) * rg);
}

} // namespace detail

double gamma_fn(double z) {
    if (std::isnan(z)) throw DomainError("gamma_fn: nan argument");
    if (detail::pole_distance(z) < 1e-8)
        throw PoleError("gamma_fn: argument within 1e-8 of a non-positive integer");
    if (z >= 0.5) {
        double lg = detail::lgamma_pos(z);
        if (lg > 709.0) return std::numeric_limits<double>::infinity();
        return std::exp(lg);
    }
    // reflection
    return M_PI / (detail::sin_pi(z) * gamma_fn(1.0 - z));
}

double digamma(double z) {
    if (std::isnan(z)) throw DomainError("digamma: nan argument");
    if (detail::pole_distance(z) < 1e-8)
        throw PoleError("digamma: argument within 1e-8 of a non-positive integer");
    if (z < 0.5)
        return digamma(1.0 - z) - M_PI * detail::cos_pi(z) / detail::sin_pi(z);
    double shift = 0.0;
    while (z < 10.0) {
        shift += 1.0 / z;
        z += 1.0;
    }
    double inv2 = 1.0 / (z * z);
    double series = 0.0, p = inv2;
    for (double c : detail::kDigamma) {
        series += c * p;
        p *= inv2;
    }
    return std::log(z) - 0.5 / z - series - shift;
}

} // namespace ccf
