#pragma once

#include "cyclemeter/special.hpp"

#include <functional>

namespace cyclemeter {

struct LindelofResult {
    Complex value;
    /// Discretization (step vs. double step) plus truncation-tail estimate.
    double error_estimate = 0;
};

/// Continuation of g(t) = sum_{k>=1} phi(k) (-t)^k through
///   g(t) = -1/(2 pi i) int_{1/2 - i inf}^{1/2 + i inf} phi(z) t^z pi / sin(pi z) dz,
/// evaluated by the trapezoid rule on Re z = 1/2 over |Im z| <= half_height.
/// t^z uses the principal branch. Throws ConvergenceError when the integrand
/// has not decayed at the truncation height.
LindelofResult lindelof_eval(const std::function<Complex(Complex)>& phi, Complex t, double half_height,
                             double step);

} // namespace cyclemeter
