#pragma once

#include <stdexcept>
#include <string>

namespace cyclemeter {

/// Caller violated a precondition (bad argument, mismatched orders, ...).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Request exceeds a configured computational budget.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The measure cannot be normalized: h_n vanishes or every weight is zero.
class DegenerateMeasureError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A numerical procedure (series tail, quadrature) failed to converge.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The weight family has no singularity class an estimator can use.
class UnsupportedClassError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Gamma evaluated at a nonpositive integer.
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace cyclemeter
