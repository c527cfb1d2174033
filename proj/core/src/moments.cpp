#include "ccf/moments.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "ccf/errors.hpp"
#include "ccf/special_functions.hpp"
#include "internal.hpp"

namespace ccf {

namespace {

void validate(const MomentParams& p) {
    if (!(p.r > 0)) throw DomainError("moments: requires r > 0");
    if (!(p.m > -1)) throw DomainError("moments: requires m > -1");
    if (!(p.alpha > -1)) throw DomainError("moments: requires alpha > -1");
    if (!(p.m + p.alpha > -1)) throw DomainError("moments: requires m + alpha > -1");
}

// ---- base moment G(r, m, a) = int_0^1 x^a J_m(r x) dx, three routes ----

// Lommel closed form; the asymptotic branch of S makes it usable for any
// parameter set once r >= 50.
double g_lommel(double r, double m, double a) {
    double t1 = std::exp2(a) * gamma_fn((m + a + 1) / 2) *
                detail::rgamma((m - a + 1) / 2) / std::pow(r, a + 1);
    double s1 = lommel_s(a - 1, m - 1, r);
    double s2 = lommel_s(a, m, r);
    double jm = bessel_j(m, r);
    double jm1 = detail::bessel_j_any(m - 1, r);
    return t1 + ((a + m - 1) * jm * s1 - jm1 * s2) / std::pow(r, a);
}

int series_order_count(double r, double m) {
    double top = r + 30 * std::max(1.0, std::cbrt(r)) + 10;
    return std::max(4, static_cast<int>(std::ceil((top - (m + 1)) / 2)) + 2);
}

// Neumann-type expansion in J_{m+2j+1}(r), written with Pochhammer ratios so
// no gamma factor can reach a pole. Valid for every r; preferred for r < 50.
double g_bessel_series(double r, double m, double a) {
    double A = (m - a + 1) / 2, B = (m + a + 3) / 2, C = (m + a + 1) / 2;
    int count = series_order_count(r, m);
    std::vector<double> J = bessel_j_sequence(m + 1, 2 * count - 1, r);
    double poch = 1.0, sum = 0.0;
    for (int j = 0; j < count; ++j) {
        sum += (m + 2 * j + 1) * poch * J[2 * j];
        poch *= (A + j) / (B + j);
        if (poch == 0.0) break;
    }
    return gamma_fn(C) * detail::rgamma(B) / r * sum;
}

// 1F2 closed form; full accuracy for r <= 100 (|z| <= 2500).
double g_hyp(double r, double m, double a) {
    SeriesResult F = hyp1f2((a + m + 1) / 2, (a + m + 3) / 2, m + 1, -r * r / 4);
    if (!F.converged)
        throw ConvergenceError("bessel_power_moment: 1F2 representation did not converge");
    return std::pow(r, m) / (std::exp2(m) * (a + m + 1)) * detail::rgamma(m + 1) * F.value;
}

// ---- alpha derivatives of the three routes ----

double dg_hyp(double r, double m, double a) {
    double aa = (a + m + 1) / 2, bb = (a + m + 3) / 2, cc = m + 1, z = -r * r / 4;
    SeriesResult F = hyp1f2(aa, bb, cc, z);
    SeriesResult Fa = hyp1f2_dparam(aa, bb, cc, z, Hyp1F2Param::A);
    SeriesResult Fb = hyp1f2_dparam(aa, bb, cc, z, Hyp1F2Param::B);
    if (!F.converged || !Fa.converged || !Fb.converged)
        throw ConvergenceError("bessel_power_moment_dalpha: 1F2 representation did not converge");
    double P = std::pow(r, m) / (std::exp2(m) * (a + m + 1)) * detail::rgamma(m + 1);
    return -P / (a + m + 1) * F.value + P * 0.5 * (Fa.value + Fb.value);
}

double dg_bessel_series(double r, double m, double a) {
    double A = (m - a + 1) / 2, B = (m + a + 3) / 2, C = (m + a + 1) / 2;
    int count = series_order_count(r, m);
    std::vector<double> J = bessel_j_sequence(m + 1, 2 * count - 1, r);
    double poch = 1.0, dpoch = 0.0, sum = 0.0, dsum = 0.0;
    for (int j = 0; j < count; ++j) {
        sum += (m + 2 * j + 1) * poch * J[2 * j];
        dsum += (m + 2 * j + 1) * dpoch * J[2 * j];
        // d/da [(A)_j/(B)_j]:  dA/da = -1/2, dB/da = +1/2
        dpoch = dpoch * (A + j) / (B + j) - poch * 0.5 / (B + j)
              - poch * (A + j) * 0.5 / ((B + j) * (B + j));
        poch *= (A + j) / (B + j);
    }
    double pref = gamma_fn(C) * detail::rgamma(B) / r;
    return pref * dsum + pref * 0.5 * (digamma(C) - digamma(B)) * sum;
}

double dg_lommel(double r, double m, double a) {
    double C2 = (m + a + 1) / 2, A2 = (m - a + 1) / 2;
    double gc = gamma_fn(C2), rg = detail::rgamma(A2), drg = detail::drgamma(A2);
    double pw = std::exp2(a) / std::pow(r, a + 1);
    double t1 = pw * gc * rg;
    double dt1 = t1 * (M_LN2 - std::log(r)) + pw * 0.5 * (gc * digamma(C2) * rg - gc * drg);

    double s1 = lommel_s(a - 1, m - 1, r), s2 = lommel_s(a, m, r);
    double ds1 = lommel_s_dmu(a - 1, m - 1, r), ds2 = lommel_s_dmu(a, m, r);
    double jm = bessel_j(m, r), jm1 = detail::bessel_j_any(m - 1, r);
    double ra = std::pow(r, a);
    double t2 = ((a + m - 1) * jm * s1 - jm1 * s2) / ra;
    double dt2 = -std::log(r) * t2 + (jm * s1 + (a + m - 1) * jm * ds1 - jm1 * ds2) / ra;
    return dt1 + dt2;
}

void cross_check(double primary, double cross, double alpha, const char* what) {
    double tol = 1e-8 * std::max(std::fabs(primary), std::fabs(cross))
               + 1e-12 / (alpha + 1);
    if (std::fabs(primary - cross) > tol) {
        std::ostringstream msg;
        msg << what << ": representations disagree: " << primary << " vs " << cross;
        throw InconsistencyError(msg.str());
    }
}

double g_select(double r, double m, double a) {
    if (r < 50) {
        double g = g_bessel_series(r, m, a);
        cross_check(g, g_hyp(r, m, a), a, "bessel_power_moment");
        return g;
    }
    double g = g_lommel(r, m, a);
    double cross = (r <= 100) ? g_hyp(r, m, a) : g_bessel_series(r, m, a);
    cross_check(g, cross, a, "bessel_power_moment");
    return g;
}

double dg_select(double r, double m, double a) {
    if (r < 50) {
        double g = dg_hyp(r, m, a);
        cross_check(g, dg_bessel_series(r, m, a), a, "bessel_power_moment_dalpha");
        return g;
    }
    double g = dg_lommel(r, m, a);
    double cross = (r <= 100) ? dg_hyp(r, m, a) : dg_bessel_series(r, m, a);
    cross_check(g, cross, a, "bessel_power_moment_dalpha");
    return g;
}

// ---- recurrence helpers ----

// banded LU with partial pivoting, kl = 6, ku = 2 (fill-in widens U to kl+ku)
class BandSolver {
public:
    BandSolver(int n, int kl, int ku)
        : n_(n), kl_(kl), ku_(ku), width_(2 * kl + ku + 1),
          ab_(static_cast<size_t>(width_) * n, 0.0) {}

    double& at(int i, int j) { return ab_[static_cast<size_t>(i - j + kl_ + ku_) * n_ + j]; }

    // returns false if singular; x is rhs in, solution out
    bool solve(std::vector<double>& x, double& cond_est) {
        double dmax = 0.0, dmin = std::numeric_limits<double>::infinity();
        for (int k = 0; k < n_; ++k) {
            int last_row = std::min(n_ - 1, k + kl_);
            int p = k;
            for (int i = k + 1; i <= last_row; ++i)
                if (std::fabs(at(i, k)) > std::fabs(at(p, k))) p = i;
            int last_col = std::min(n_ - 1, k + kl_ + ku_);
            if (p != k) {
                for (int j = k; j <= last_col; ++j) std::swap(at(k, j), at(p, j));
                std::swap(x[k], x[p]);
            }
            double d = at(k, k);
            if (d == 0.0) return false;
            dmax = std::max(dmax, std::fabs(d));
            dmin = std::min(dmin, std::fabs(d));
            for (int i = k + 1; i <= last_row; ++i) {
                double f = at(i, k) / d;
                if (f == 0.0) continue;
                for (int j = k + 1; j <= last_col; ++j) at(i, j) -= f * at(k, j);
                x[i] -= f * x[k];
            }
        }
        for (int i = n_ - 1; i >= 0; --i) {
            double s = x[i];
            int last_col = std::min(n_ - 1, i + kl_ + ku_);
            for (int j = i + 1; j <= last_col; ++j) s -= at(i, j) * x[j];
            x[i] = s / at(i, i);
        }
        cond_est = (dmin > 0) ? dmax / dmin : std::numeric_limits<double>::infinity();
        return true;
    }

private:
    int n_, kl_, ku_, width_;
    std::vector<double> ab_;
};

double table_at(const std::vector<double>& t, int idx) {
    return t[static_cast<size_t>(std::abs(idx))]; // M_{-j} = M_j
}

double recurrence_residual(const MomentParams& p, const std::vector<double>& M,
                           const std::vector<double>* Mlog) {
    int top = static_cast<int>(M.size()) - 1;
    int top_log = Mlog ? static_cast<int>(Mlog->size()) - 1 : -1;
    double worst = 0.0;
    for (int j = 0; j + 4 <= top; ++j) {
        auto cs = detail::recurrence_coeffs(p, j);
        double acc = 0.0, scale = 0.0;
        for (int i = 0; i < 7; ++i) {
            double term = cs[i] * table_at(M, j + detail::recurrence_offsets[i]);
            acc += term;
            scale += std::fabs(term);
        }
        if (scale > 0) worst = std::max(worst, std::fabs(acc) / scale);
        if (Mlog && j + 4 <= top_log && j + 2 <= top) {
            double rhs = detail::log_recurrence_rhs(p, j, M);
            double accl = -rhs, scalel = std::fabs(rhs);
            for (int i = 0; i < 7; ++i) {
                double term = cs[i] * table_at(*Mlog, j + detail::recurrence_offsets[i]);
                accl += term;
                scalel += std::fabs(term);
            }
            if (scalel > 0) worst = std::max(worst, std::fabs(accl) / scalel);
        }
    }
    return worst;
}

void check_magnitudes(const MomentParams& p, const std::vector<double>& M, bool log_kernel) {
    if (p.m < 0) return; // |J_m| <= 1 only holds for m >= 0
    double bound = log_kernel ? 1.0 / ((p.alpha + 1) * (p.alpha + 1)) : 1.0 / (p.alpha + 1);
    bound *= 1.0 + 1e-6;
    for (double v : M)
        if (!(std::fabs(v) <= bound + 1e-12))
            throw ConvergenceError("moments: instability detected (magnitude bound violated)");
}

std::vector<double> forward_plain(const MomentParams& p, int top) {
    auto seed = seed_moments(p);
    std::vector<double> M(static_cast<size_t>(top) + 1, 0.0);
    for (int j = 0; j <= std::min(top, 3); ++j) M[j] = seed[j];
    for (int j = 0; j + 4 <= top; ++j) {
        auto cs = detail::recurrence_coeffs(p, j);
        double lead = cs[0];
        double acc = 0.0;
        for (int i = 1; i < 7; ++i) {
            int idx = j + detail::recurrence_offsets[i];
            if (std::abs(idx) == j + 4) { // symmetric wrap M_{-4} = M_4 at j = 0
                lead += cs[i];
            } else {
                acc += cs[i] * table_at(M, idx);
            }
        }
        M[j + 4] = -acc / lead;
    }
    return M;
}

std::vector<double> forward_log(const MomentParams& p, int top, const std::vector<double>& M) {
    auto seed = seed_log_moments(p);
    std::vector<double> L(static_cast<size_t>(top) + 1, 0.0);
    for (int j = 0; j <= std::min(top, 3); ++j) L[j] = seed[j];
    for (int j = 0; j + 4 <= top; ++j) {
        auto cs = detail::recurrence_coeffs(p, j);
        double lead = cs[0];
        double acc = -detail::log_recurrence_rhs(p, j, M);
        for (int i = 1; i < 7; ++i) {
            int idx = j + detail::recurrence_offsets[i];
            if (std::abs(idx) == j + 4) {
                lead += cs[i];
            } else {
                acc += cs[i] * table_at(L, idx);
            }
        }
        L[j + 4] = -acc / lead;
    }
    return L;
}

double end_value(const MomentParams& p, int j, Kernel kernel) {
    double v = moment_tail_estimate(p, j, kernel);
    return std::fabs(v) < 1e-300 ? 0.0 : v;
}

// one Oliver solve at fixed K: unknowns M_4..M_{K-2}, instances j = 2..K-4,
// knowns M_0..M_3 (negative indices wrap symmetrically) and tail estimates
// at j = K-1, K
std::vector<double> oliver_solve(const MomentParams& p, int K,
                                 const std::array<double, 4>& seed,
                                 Kernel kernel, const std::vector<double>* M_for_rhs) {
    int n = K - 5;
    BandSolver A(n, 6, 2);
    std::vector<double> rhs(static_cast<size_t>(n), 0.0);
    double endm1 = end_value(p, K - 1, kernel), endm0 = end_value(p, K, kernel);
    for (int row = 0; row < n; ++row) {
        int j = row + 2;
        auto cs = detail::recurrence_coeffs(p, j);
        if (M_for_rhs) rhs[row] = detail::log_recurrence_rhs(p, j, *M_for_rhs);
        for (int i = 0; i < 7; ++i) {
            int idx = std::abs(j + detail::recurrence_offsets[i]);
            double c = cs[i];
            if (idx >= 4 && idx <= K - 2) {
                A.at(row, idx - 4) += c;
            } else if (idx <= 3) {
                rhs[row] -= c * seed[idx];
            } else { // idx == K-1 or K
                rhs[row] -= c * (idx == K - 1 ? endm1 : endm0);
            }
        }
    }
    double cond = 0.0;
    if (!A.solve(rhs, cond)) {
        std::ostringstream msg;
        msg << "moments_boundary_value: singular band system (K=" << K
            << ", cond_est=" << cond << ")";
        throw SingularSystemError(msg.str());
    }
    std::vector<double> M(static_cast<size_t>(K) - 1, 0.0); // indices 0..K-2
    for (int j = 0; j <= 3; ++j) M[j] = seed[j];
    for (int i = 0; i < n; ++i) M[i + 4] = rhs[i];
    return M;
}

} // namespace

namespace detail {

std::array<double, 7> recurrence_coeffs(const MomentParams& p, int j) {
    double r2 = p.r * p.r, a = p.alpha, mm = p.m * p.m, aa = a * a;
    double c4p = r2 / 16;
    double c2p = (j + 3.0) * (j + 3.0 + 2 * a) + aa - mm - r2 / 4;
    double c1p = 4 * (mm - aa) - 2.0 * (j + 2) * (2 * a - 1);
    double c0 = -(2.0 * (double(j) * j - 4) + 6 * (mm - aa) - 2 * (2 * a - 1) - 3 * r2 / 8);
    double c1m = 4 * (mm - aa) + 2.0 * (j - 2) * (2 * a - 1);
    double c2m = (j - 3.0) * (j - 3.0 - 2 * a) + aa - mm - r2 / 4;
    double c4m = r2 / 16;
    return {c4p, c2p, c1p, c0, c1m, c2m, c4m};
}

double log_recurrence_rhs(const MomentParams& p, int j, const std::vector<double>& M) {
    double a = p.alpha;
    return -2 * (a + j + 3) * table_at(M, j + 2) + 4 * (2 * a + j + 2) * table_at(M, j + 1)
           - 4 * (3 * a + 1) * table_at(M, j) + 4 * (2 * a - j + 2) * table_at(M, j - 1)
           + 2 * (j - a - 3) * table_at(M, j - 2);
}

} // namespace detail

double bessel_power_moment(const MomentParams& p) {
    validate(p);
    return g_select(p.r, p.m, p.alpha);
}

double bessel_power_moment_dalpha(const MomentParams& p) {
    validate(p);
    return dg_select(p.r, p.m, p.alpha);
}

std::array<double, 4> seed_moments(const MomentParams& p) {
    validate(p);
    double g0 = g_select(p.r, p.m, p.alpha);
    double g1 = g_select(p.r, p.m, p.alpha + 1);
    double g2 = g_select(p.r, p.m, p.alpha + 2);
    double g3 = g_select(p.r, p.m, p.alpha + 3);
    double M0 = g0;
    double M1 = 2 * g1 - M0;
    double M2 = 8 * g2 - 4 * M1 - 3 * M0;
    double M3 = 32 * g3 - 6 * M2 - 15 * M1 - 10 * M0;
    return {M0, M1, M2, M3};
}

std::array<double, 4> seed_log_moments(const MomentParams& p) {
    validate(p);
    double g0 = dg_select(p.r, p.m, p.alpha);
    double g1 = dg_select(p.r, p.m, p.alpha + 1);
    double g2 = dg_select(p.r, p.m, p.alpha + 2);
    double g3 = dg_select(p.r, p.m, p.alpha + 3);
    double M0 = g0;
    double M1 = 2 * g1 - M0;
    double M2 = 8 * g2 - 4 * M1 - 3 * M0;
    double M3 = 32 * g3 - 6 * M2 - 15 * M1 - 10 * M0;
    return {M0, M1, M2, M3};
}

double moment_tail_estimate(const MomentParams& p, int j, Kernel kernel) {
    if (j < 1) throw DomainError("moment_tail_estimate: requires j >= 1");
    validate(p);
    double a = p.alpha, m = p.m, r = p.r;
    double s = 2 * a + 2 * m + 2;
    double C = std::exp2(1.0 - s - m) * std::pow(r, m) * detail::rgamma(m + 1);
    double g = gamma_fn(s);
    double cossn = detail::cos_pi(s / 2), sinsn = detail::sin_pi(s / 2);
    double js = std::pow(double(j), -s);
    double sgn = (j % 2 == 0) ? 1.0 : -1.0;
    if (kernel == Kernel::Plain)
        return -bessel_j(m, r) / (2.0 * double(j) * j) + sgn * C * g * cossn * js;
    return sgn * 2 * C * g *
           (digamma(s) * cossn - (M_PI / 2) * sinsn - cossn * std::log(2.0 * j)) * js;
}

MomentTable moments_forward(const MomentParams& p, int J, bool with_log) {
    validate(p);
    if (J < 0) throw DomainError("moments_forward: requires J >= 0");
    if (p.r < 2.0 * J)
        throw RegimeError("moments_forward: outside the stability regime r >= 2J");
    int top = with_log ? J + 2 : J;
    top = std::max(top, 3);
    std::vector<double> M = forward_plain(p, top);
    MomentTable out;
    out.params = p;
    out.J = J;
    out.regime = MomentRegime::Forward;
    std::vector<double> Mlog;
    if (with_log) {
        Mlog = forward_log(p, std::max(J, 3), M);
        Mlog.resize(static_cast<size_t>(J) + 1);
    }
    out.residual = recurrence_residual(p, M, with_log ? &Mlog : nullptr);
    M.resize(static_cast<size_t>(std::max(J, 0)) + 1);
    check_magnitudes(p, M, false);
    if (with_log) {
        check_magnitudes(p, Mlog, true);
        out.Mlog = std::move(Mlog);
    }
    if (out.residual > 1e-9)
        throw ConvergenceError("moments_forward: instability detected (recurrence residual)");
    out.M = std::move(M);
    return out;
}

MomentTable moments_boundary_value(const MomentParams& p, int J, bool with_log) {
    validate(p);
    if (J < 0) throw DomainError("moments_boundary_value: requires J >= 0");
    int Jtop = with_log ? J + 2 : J;
    auto seed = seed_moments(p);
    std::array<double, 4> seed_log{};
    if (with_log) seed_log = seed_log_moments(p);

    int K = std::max(2 * Jtop, static_cast<int>(std::ceil(2 * p.r))) + 16;
    constexpr int kMaxK = 1 << 16;
    std::vector<double> M, L, prevM, prevL;
    bool converged = false;
    while (K <= kMaxK) {
        M = oliver_solve(p, K, seed, Kernel::Plain, nullptr);
        if (with_log) L = oliver_solve(p, K, seed_log, Kernel::Log, &M);
        if (!prevM.empty()) {
            double delta = 0.0;
            for (int j = 0; j <= Jtop; ++j)
                delta = std::max(delta, std::fabs(M[j] - prevM[j]) /
                                            std::max(std::fabs(M[j]), 1e-280));
            if (with_log)
                for (int j = 0; j <= J; ++j)
                    delta = std::max(delta, std::fabs(L[j] - prevL[j]) /
                                                std::max(std::fabs(L[j]), 1e-280));
            if (delta <= 1e-11) {
                converged = true;
                break;
            }
        }
        prevM = M;
        prevL = L;
        K *= 2;
    }
    if (!converged)
        throw ConvergenceError("moments_boundary_value: K-doubling did not stabilize the table");

    MomentTable out;
    out.params = p;
    out.J = J;
    out.regime = MomentRegime::BoundaryValue;
    M.resize(static_cast<size_t>(Jtop) + 1);
    if (with_log) L.resize(static_cast<size_t>(J) + 1);
    out.residual = recurrence_residual(p, M, with_log ? &L : nullptr);
    M.resize(static_cast<size_t>(J) + 1);
    check_magnitudes(p, M, false);
    if (with_log) {
        check_magnitudes(p, L, true);
        out.Mlog = std::move(L);
    }
    out.M = std::move(M);
    return out;
}

std::vector<double> log_moments(const MomentParams& p, int J, const MomentTable& m_table) {
    validate(p);
    if (static_cast<int>(m_table.M.size()) < J + 3)
        throw DomainError("log_moments: moment table must cover indices 0..J+2");
    if (p.r >= 2.0 * J) {
        std::vector<double> L = forward_log(p, std::max(J, 3), m_table.M);
        L.resize(static_cast<size_t>(J) + 1);
        return L;
    }
    MomentTable t = moments_boundary_value(p, J, true);
    return *t.Mlog;
}

MomentTable compute_moments(const MomentParams& p, int J, bool with_log) {
    if (p.r >= 2.0 * J) return moments_forward(p, J, with_log);
    return moments_boundary_value(p, J, with_log);
}

} // namespace ccf
