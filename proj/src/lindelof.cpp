#include "cyclemeter/lindelof.hpp"

#include "cyclemeter/error.hpp"
#include "cyclemeter/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cyclemeter {

LindelofResult lindelof_eval(const std::function<Complex(Complex)>& phi, Complex t, double half_height,
                             double step) {
    if (!(half_height > 0) || !(step > 0)) throw UsageError("lindelof_eval needs positive half_height and step");
    if (t == 0.0) return {0.0, 0.0};
    const Complex log_t = std::log(t);
    // On z = 1/2 + iy: pi/sin(pi z) = pi/cosh(pi y) and dz = i dy, so
    // g(t) = -1/2 int phi(z) t^z / cosh(pi y) dy.
    auto integrand = [&](double y) -> Complex {
        const Complex z(0.5, y);
        const double ay = std::abs(y);
        const double e = std::exp(-2 * std::numbers::pi * ay);
        // t^z / cosh(pi y) = 2 exp(z log t - pi |y|) / (1 + e^{-2 pi |y|})
        return -phi(z) * std::exp(z * log_t - std::numbers::pi * ay) / (1.0 + e);
    };

    const long count = std::max(1L, std::lround(half_height / step));
    const Complex fine = kernels::omp::trapezoid(integrand, step, count);
    const Complex coarse = kernels::omp::trapezoid(integrand, 2 * step, count / 2);

    const double H = count * step;
    const double edge = std::max(std::abs(integrand(H)), std::abs(integrand(-H)));
    double peak = 0;
    for (double y = -4; y <= 4; y += 0.25) peak = std::max(peak, std::abs(integrand(y)));
    if (!(edge <= 1e-6 * peak) || !std::isfinite(std::abs(fine))) {
        throw ConvergenceError("Lindelof integrand has not decayed at the truncation height; "
                               "t is too close to the edge of the continuation sector");
    }
    // Tail beyond H for any decay at least as fast as 1/y^2.
    const double tail = 2 * edge * H;
    return {fine, std::abs(fine - coarse) + tail};
}

} // namespace cyclemeter
