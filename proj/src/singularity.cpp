#include "cyclemeter/singularity.hpp"

#include "cyclemeter/error.hpp"

#include <cmath>

namespace cyclemeter {

Complex hwang_estimate(const SingularityClass& cls, Complex S_at_r, int n, Complex w) {
    if (n <= 0) throw UsageError("hwang_estimate needs n >= 1");
    Complex rg = reciprocal_gamma(cls.theta * w);
    if (rg == 0.0) return 0.0;
    const double logn = std::log(static_cast<double>(n));
    Complex log_scale = cls.K * w + (w * cls.theta - 1.0) * logn - static_cast<double>(n) * std::log(cls.r);
    return std::exp(log_scale) * S_at_r * rg;
}

double asymptotic_hn(const SingularityClass& cls, int n) {
    if (n <= 0) throw UsageError("asymptotic_hn needs n >= 1");
    if (!(cls.theta > 0)) {
        throw UnsupportedClassError("no h_n asymptotics for theta = 0: the main term vanishes");
    }
    const double logn = std::log(static_cast<double>(n));
    double log_h = cls.K + (cls.theta - 1) * logn - n * std::log(cls.r);
    return std::exp(log_h) * reciprocal_gamma(cls.theta).real();
}

Complex mod_poisson_limit(double theta, double s) {
    if (!(theta > 0)) throw UsageError("mod_poisson_limit needs theta > 0");
    if (s == 0) return 1.0;
    return gamma(theta) * reciprocal_gamma(theta * std::polar(1.0, s));
}

LargeDeviationEstimate large_deviation_estimate(double theta, double K, int n, int k) {
    if (!(theta > 0)) throw UsageError("large_deviation_estimate needs theta > 0");
    if (n < 1) throw UsageError("large_deviation_estimate needs n >= 1");
    if (k < 1) throw UsageError("large_deviation_estimate needs k >= 1");
    LargeDeviationEstimate e;
    e.t_n = K + theta * std::log(static_cast<double>(n));
    if (!(e.t_n > 0)) throw UsageError("large_deviation_estimate needs t_n = K + theta log n > 0");
    e.x = k / e.t_n;
    e.poisson = poisson_pmf(e.t_n, k);
    const double g = gamma(theta);
    const double rg_theta_x = reciprocal_gamma(theta * e.x).real();
    e.direct = e.poisson * g * rg_theta_x;
    e.estimate = e.direct * reciprocal_gamma(e.x).real();
    e.tilt = std::log(e.x);
    e.rate = e.x * e.tilt - e.x + 1;
    return e;
}

} // namespace cyclemeter
