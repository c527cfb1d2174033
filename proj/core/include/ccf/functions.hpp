#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace ccf {

/// A named integrand with exact derivatives (Taylor-mode arithmetic inside),
/// used by the CLI, the golden-value registry, and the test suites.
struct TestFunction {
    std::string id;
    std::function<double(double)> f;
    /// k-th derivative at x, exact up to k = 4.
    std::function<double(int, double)> deriv;
};

/// Built-in registry: one, x, exp, runge (1/(1+25 t^2) on the variable
/// t = 2x/b - 1), reciprocal (1/(1+x)), cos5, abs_power (|x-1/2|^p).
/// b is the interval end (runge maps through it); p parameterizes abs_power.
TestFunction make_function(std::string_view id, double b = 1.0, double p = 3.0);

std::vector<std::string> function_ids();

} // namespace ccf
