#pragma once

#include "cyclemeter/singularity_class.hpp"
#include "cyclemeter/special.hpp"

namespace cyclemeter {

/// Main term of the singularity-analysis estimate for [t^n] e^{w g(t)} S(t, w):
///   e^{K w} n^{w theta - 1} r^{-n} S(r, w) / Gamma(theta w).
/// Zero when theta w is a pole of Gamma (the main term vanishes).
Complex hwang_estimate(const SingularityClass& cls, Complex S_at_r, int n, Complex w);

/// h_n ~ e^K n^{theta-1} / (r^n Gamma(theta)); refuses theta = 0.
double asymptotic_hn(const SingularityClass& cls, int n);

/// Limiting function Gamma(theta) / Gamma(theta e^{is}) of the mod-Poisson
/// convergence of the number of cycles.
Complex mod_poisson_limit(double theta, double s);

struct LargeDeviationEstimate {
    double t_n = 0;        ///< K + theta log n
    double x = 0;          ///< k / t_n
    double poisson = 0;    ///< e^{-t_n} t_n^k / k!
    double estimate = 0;   ///< poisson * Gamma(theta) / (Gamma(x) Gamma(theta x))
    double direct = 0;     ///< poisson * Gamma(theta) / Gamma(theta x)
    double rate = 0;       ///< I(x) = x log x - x + 1
    double tilt = 0;       ///< h = log x, solving eta'(h) = x for eta(z) = e^z - 1
};

/// Main-term large-deviation estimate at k. `direct` is the same tilt
/// applied to K_0n itself rather than to K_0n - 1; both coincide at x = 1.
LargeDeviationEstimate large_deviation_estimate(double theta, double K, int n, int k);

} // namespace cyclemeter
