#pragma once

#include <functional>

#include "ccf/quadrature.hpp"

namespace ccf {

enum class Grading { SqrtSubstitution, GradedMesh };

struct OracleConfig {
    double abs_tol = 1e-13;
    double rel_tol = 1e-11;
    int max_panels = 400000;
    Grading grading = Grading::SqrtSubstitution;
};

struct OracleResult {
    double value;
    double err_est;
};

/// Brute-force reference integrator for I_1 / I_2: removes the endpoint
/// singularity by the substitution x = u^q with q = ceil(2/(1+alpha)) (or a
/// dyadically graded mesh), splits panels at the Bessel oscillation scale
/// pi/(2 omega), and refines each panel with adaptive Gauss-Kronrod 7/15.
/// Deterministic: panels are summed in index order. Requires b*omega <= 1e4.
OracleResult reference_integral(const IntegralSpec& spec,
                                const std::function<double(double)>& f,
                                const OracleConfig& cfg = {});

} // namespace ccf
