#pragma once

#include <array>
#include <optional>
#include <vector>

namespace ccf {

enum class Kernel { Plain, Log };
enum class MomentRegime { Forward, BoundaryValue };

/// Parameters of the modified moments M_j = int_0^1 x^alpha T*_j(x) J_m(r x) dx.
struct MomentParams {
    double r;     // r = b * omega, > 0
    double m;     // Bessel order, > -1
    double alpha; // weight exponent, > -1, with m + alpha > -1
};

struct MomentTable {
    MomentParams params{1, 0, 0};
    int J = 0;
    std::vector<double> M;                     // size J+1
    std::optional<std::vector<double>> Mlog;   // size J+1 when requested
    MomentRegime regime = MomentRegime::Forward;
    double residual = 0; // max normalized recurrence residual over interior j
};

/// G(r, m, alpha) = int_0^1 x^alpha J_m(r x) dx. Selects the Bessel series
/// form for r < 50 and the Lommel closed form for r >= 50; an independent
/// representation cross-checks every evaluation.
double bessel_power_moment(const MomentParams& p);

/// dG/dalpha = int_0^1 x^alpha ln(x) J_m(r x) dx, same route selection.
double bessel_power_moment_dalpha(const MomentParams& p);

/// Closed-form starting values M_0..M_3 (and the log variants).
std::array<double, 4> seed_moments(const MomentParams& p);
std::array<double, 4> seed_log_moments(const MomentParams& p);

/// Forward recursion, stable for r >= 2J. Throws RegimeError outside.
MomentTable moments_forward(const MomentParams& p, int J, bool with_log = false);

/// Oliver-style boundary-value solve of the order-8 recurrence as a banded
/// system; valid for any r, required for r < 2J.
MomentTable moments_boundary_value(const MomentParams& p, int J, bool with_log = false);

/// Log-kernel moments from an existing table (table.M must cover 0..J+2).
std::vector<double> log_moments(const MomentParams& p, int J, const MomentTable& m_table);

/// Regime-selecting convenience: forward when r >= 2J, else boundary value.
MomentTable compute_moments(const MomentParams& p, int J, bool with_log = false);

/// Large-j tail estimate of the [0,1]-domain moment, used for end-value
/// seeding of the boundary-value solve and for large-j validation. Accuracy
/// degrades for j close to r or when 2 alpha + 2 m + 2 is large.
double moment_tail_estimate(const MomentParams& p, int j, Kernel kernel);

namespace detail {
/// Coefficients of the order-8 moment recurrence at index j for offsets
/// {+4, +2, +1, 0, -1, -2, -4}, and the log-kernel right-hand side. Exposed
/// for the recurrence validation gate.
std::array<double, 7> recurrence_coeffs(const MomentParams& p, int j);
constexpr std::array<int, 7> recurrence_offsets{4, 2, 1, 0, -1, -2, -4};
double log_recurrence_rhs(const MomentParams& p, int j,
                          const std::vector<double>& M); // consumes M[j-2..j+2]
} // namespace detail

} // namespace ccf
