#pragma once

#include <stdexcept>
#include <string>

namespace ccf {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Argument outside the documented domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

/// A parameter landed inside the exclusion zone around a pole of a gamma
/// factor (closed forms are not continued into their singular parameter sets).
struct PoleError : Error {
    using Error::Error;
};

/// A series or iteration failed to reach the requested tolerance.
struct ConvergenceError : Error {
    using Error::Error;
};

/// Forward recursion requested outside its stability regime.
struct RegimeError : Error {
    using Error::Error;
};

/// A linear solve broke down; the message carries a condition estimate.
struct SingularSystemError : Error {
    using Error::Error;
};

/// Two independent representations of the same quantity disagree.
struct InconsistencyError : Error {
    using Error::Error;
};

/// The reference integrator could not certify the requested tolerance.
struct ToleranceError : Error {
    ToleranceError(const std::string& msg, double best, double err)
        : Error(msg), best_estimate(best), err_estimate(err) {}
    double best_estimate;
    double err_estimate;
};

} // namespace ccf
