#include "ccf/special_functions.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "ccf/errors.hpp"
#include "internal.hpp"

namespace ccf {
namespace detail {

namespace {

// Euler's constant split across two doubles; summed in f128 it carries
// ~33 significant digits.
constexpr double kEulerHi = 5.77215664901532866e-01;
constexpr double kEulerLo = -4.94291515243064487e-18;

const f128 kPiQ = M_PIq;

// Rough upper estimate of log10 |J_nu(x)| from the leading series term,
// used only to short-circuit deep-underflow cases.
double leading_term_log10(double nu, double x) {
    if (x <= 0) return nu == 0 ? 0 : -400;
    return (nu * std::log(x / 2) - lgamma_pos(nu + 1)) / std::log(10.0);
}

double j_series_double(double nu, double x) {
    // first term via logs so large nu cannot overflow the intermediate
    double lt = nu * std::log(x / 2) - lgamma_pos(nu + 1);
    if (lt < -745.0) return 0.0;
    double t = std::exp(lt);
    double sum = t;
    double q = x * x / 4;
    for (int k = 0; k < 2000; ++k) {
        t *= -q / ((k + 1) * (nu + k + 1));
        sum += t;
        if (std::fabs(t) < 1e-18 * std::fabs(sum) + 1e-320) break;
    }
    return sum;
}

} // namespace

DD bessel_j_series_dd(double nu, double x) {
    // prefactor (x/2)^nu / Gamma(nu+1): quad-level power, double-level gamma
    f128 xh = f128(x) / 2;
    f128 pref;
    if (nu == 0.0) {
        pref = 1;
    } else {
        f128 lp = f128(nu) * logq(xh);
        if (double(lp) < -11000.0) return DD{};
        pref = expq(lp);
    }
    pref *= f128(rgamma(nu + 1.0));
    DD t{pref};
    DD sum = t;
    f128 q = f128(x) * f128(x) / 4;
    for (int k = 0; k < 4000; ++k) {
        t = dd_mul_f(t, -q);
        t = dd_div_f(t, f128(k + 1) * (f128(nu) + (k + 1)));
        sum = dd_add(sum, t);
        if (dd_abs_hi(t) < f128(1e-45) * dd_abs_hi(sum) + f128(1e-4500)) break;
    }
    return sum;
}

void hankel_jy(double nu, double x, double& J, double& Y) {
    double mu4 = 4.0 * nu * nu;
    double P = 1.0, Q = 0.0;
    double term = 1.0, best = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= 60; ++k) {
        term *= (mu4 - (2 * k - 1) * (2 * k - 1)) / (8.0 * x * k);
        if (std::fabs(term) >= best) break;
        best = std::fabs(term);
        int phase = (k / 2) % 2; // sequence + + - - + + ...
        double signed_term = phase ? -term : term;
        if (k % 2 == 1)
            Q += signed_term;
        else
            P += signed_term;
    }
    double chi = x - (0.5 * nu + 0.25) * M_PI;
    double f = std::sqrt(2.0 / (M_PI * x));
    double c = std::cos(chi), s = std::sin(chi);
    J = f * (P * c - Q * s);
    Y = f * (P * s + Q * c);
}

void miller_sequence(double nu0, int count, double x, double* out) {
    int L = static_cast<int>(std::max(double(count) + 2, x) + 15 + 8 * std::cbrt(x));
    std::vector<double> v(static_cast<size_t>(L) + 2, 0.0);
    v[L + 1] = 0.0;
    v[L] = 1e-30;
    for (int k = L; k >= 1; --k) {
        v[k - 1] = (2.0 * (nu0 + k) / x) * v[k] - v[k + 1];
        if (std::fabs(v[k - 1]) > 1e250) {
            for (int i = k - 1; i <= L + 1; ++i) v[i] *= 1e-250;
        }
    }
    // Neumann normalization: sum_k c_k J_{nu0+2k} = (x/2)^nu0,
    // c_0 = Gamma(nu0+1), c_{k+1}/c_k = (nu0+2k+2)(nu0+k) / ((nu0+2k)(k+1)).
    double S = std::exp(lgamma_pos(nu0 + 1.0)) * v[0];
    double ck = (nu0 + 2.0) * std::exp(lgamma_pos(nu0 + 1.0));
    for (int k = 1; 2 * k <= L; ++k) {
        S += ck * v[2 * k];
        ck *= (nu0 + 2.0 * k + 2.0) * (nu0 + k) / ((nu0 + 2.0 * k) * (k + 1.0));
    }
    double scale = std::pow(x / 2.0, nu0) / S;
    for (int k = 0; k < count; ++k) out[k] = v[k] * scale;
}

namespace {

double bessel_j_pos(double nu, double x) {
    if (x == 0.0) {
        if (nu == 0.0) return 1.0;
        if (nu > 0.0) return 0.0;
        return std::numeric_limits<double>::infinity(); // nu in (-1,0)
    }
    if (x <= 6.0) return j_series_double(nu, x);
    if (nu >= 0.0 && leading_term_log10(nu, x) + 0.22 * x < -330.0) return 0.0;
    if (x >= std::max(20.0, 5.0 * std::fabs(nu))) {
        double J, Y;
        hankel_jy(nu, x, J, Y);
        return J;
    }
    if (nu < 0.0) {
        // nu in (-1, 0) and 6 < x < 20: reflect through the series engine
        double mu = -nu;
        return cos_pi(mu) * bessel_j_series_dd(mu, x).to_double() -
               sin_pi(mu) * bessel_y(mu, x);
    }
    int n = static_cast<int>(std::floor(nu));
    double frac = nu - n;
    std::vector<double> seq(static_cast<size_t>(n) + 1);
    miller_sequence(frac, n + 1, x, seq.data());
    return seq[n];
}

// Y_n for integer n in {0,1} at small x, pair precision throughout.
// Y_n = (2/pi)(ln(x/2)+g) J_n - (1/pi) sum_{k<n} (n-1-k)!/k! (x/2)^{2k-n}
//     - (1/pi) sum_k (-1)^k (H_k + H_{n+k}) / (k! (n+k)!) (x/2)^{2k+n}
double y_integer_small(int n, double x) {
    DD Jn = bessel_j_series_dd(n, x);
    f128 xh = f128(x) / 2;
    f128 logterm = logq(xh);
    DD euler = dd_add(DD{f128(kEulerHi)}, DD{f128(kEulerLo)});
    DD s1 = dd_mul(dd_add(DD{logterm}, euler), Jn);
    s1 = dd_mul_f(s1, f128(2) / kPiQ);

    DD s2{};
    if (n == 1) s2 = DD{f128(1) / xh}; // (n-1-k)!/k! (x/2)^{2k-n}, k=0 only

    DD H_k{}, H_nk{};
    for (int i = 1; i <= n; ++i) H_nk = dd_add(H_nk, dd_inv_f(f128(i)));
    f128 fac_k = 1, fac_nk = 1;
    for (int i = 2; i <= n; ++i) fac_nk *= i;
    f128 xpow = powq(xh, f128(n));
    DD s3{};
    for (int k = 0; k < 600; ++k) {
        DD h = dd_add(H_k, H_nk);
        DD t = dd_mul_f(h, xpow / (fac_k * fac_nk));
        if (k % 2) t = dd_neg(t);
        s3 = dd_add(s3, t);
        if (k > 4 && dd_abs_hi(t) < f128(1e-45) * (dd_abs_hi(s3) + f128(1e-30))) break;
        H_k = dd_add(H_k, dd_inv_f(f128(k + 1)));
        H_nk = dd_add(H_nk, dd_inv_f(f128(n + k + 1)));
        fac_k *= (k + 1);
        fac_nk *= (n + k + 1);
        xpow *= xh * xh;
    }
    DD result = dd_sub(s1, dd_div_f(dd_add(s2, s3), kPiQ));
    return result.to_double();
}

// base pair (Y_f, Y_{f+1}) with f in [0,1), x < 20, away from integer order
void y_base_reflection(double f, double x, double& y0, double& y1) {
    DD jp = bessel_j_series_dd(f, x);
    DD jm = bessel_j_series_dd(-f, x);
    double sp = sin_pi(f), cp = cos_pi(f);
    y0 = dd_sub(dd_mul_f(jp, f128(cp)), jm).to_double() / sp;
    DD jp1 = bessel_j_series_dd(f + 1.0, x);
    DD jm1 = bessel_j_series_dd(-f - 1.0, x);
    // sin((f+1)pi) = -sin(f pi), cos((f+1)pi) = -cos(f pi)
    y1 = dd_sub(dd_mul_f(jp1, f128(-cp)), jm1).to_double() / (-sp);
}

double bessel_y_pos(double nu, double x) {
    int n = static_cast<int>(std::floor(nu));
    double f = nu - n;
    double y0, y1;
    if (x >= std::max(20.0, 5.0 * (f + 1.0))) {
        double J;
        hankel_jy(f, x, J, y0);
        hankel_jy(f + 1.0, x, J, y1);
    } else if (f < 1e-8 || f > 1.0 - 1e-8) {
        // treat as integer order (documented accuracy note for near-integer)
        int base = (f > 0.5) ? n + 1 : n;
        y0 = y_integer_small(0, x);
        y1 = y_integer_small(1, x);
        n = base;
        f = 0.0;
    } else {
        y_base_reflection(f, x, y0, y1);
    }
    if (n == 0) return y0;
    if (n == 1) return y1;
    double ym = y0, y = y1;
    for (int k = 1; k < n; ++k) {
        double yn = 2.0 * (f + k) / x * y - ym;
        ym = y;
        y = yn;
        if (std::isinf(y)) return y;
    }
    return y;
}

} // namespace

double bessel_j_any(double nu, double x) {
    if (nu > -1.0) return bessel_j_pos(nu, x);
    double mu = -nu;
    double nearest = std::nearbyint(mu);
    if (std::fabs(mu - nearest) < 1e-12) {
        int ni = static_cast<int>(nearest);
        double v = bessel_j_pos(nearest, x);
        return (ni % 2) ? -v : v;
    }
    return cos_pi(mu) * bessel_j_pos(mu, x) - sin_pi(mu) * bessel_y(mu, x);
}

} // namespace detail

double bessel_j(double nu, double x) {
    if (!(nu > -1.0)) throw DomainError("bessel_j: requires order nu > -1");
    if (!(x >= 0.0)) throw DomainError("bessel_j: requires x >= 0");
    return detail::bessel_j_pos(nu, x);
}

double bessel_y(double nu, double x) {
    if (!(x > 0.0)) throw DomainError("bessel_y: requires x > 0");
    if (nu < 0.0) {
        double mu = -nu;
        return detail::cos_pi(mu) * bessel_y(mu, x) +
               detail::sin_pi(mu) * detail::bessel_j_pos(mu, x);
    }
    return detail::bessel_y_pos(nu, x);
}

std::vector<double> bessel_j_sequence(double nu0, int count, double x) {
    if (!(nu0 > -1.0)) throw DomainError("bessel_j_sequence: requires nu0 > -1");
    if (!(x > 0.0) || count < 1) throw DomainError("bessel_j_sequence: requires x > 0, count >= 1");
    std::vector<double> out(static_cast<size_t>(count));
    if (nu0 >= 0.0) {
        int base = static_cast<int>(std::floor(nu0));
        double frac = nu0 - base;
        std::vector<double> seq(static_cast<size_t>(base + count));
        detail::miller_sequence(frac, base + count, x, seq.data());
        for (int k = 0; k < count; ++k) out[k] = seq[base + k];
    } else {
        out[0] = detail::bessel_j_any(nu0, x);
        if (count > 1) {
            std::vector<double> seq(static_cast<size_t>(count - 1));
            detail::miller_sequence(nu0 + 1.0, count - 1, x, seq.data());
            for (int k = 1; k < count; ++k) out[k] = seq[k - 1];
        }
    }
    return out;
}

} // namespace ccf
