#pragma once

#include <complex>

namespace cyclemeter {

using Complex = std::complex<double>;

/// Gamma function, Lanczos approximation (g = 7, nine terms) with
/// reflection for Re z < 1/2. Throws PoleError at nonpositive integers.
Complex complex_gamma(Complex z);

/// 1/Gamma(z), entire: exactly zero at the poles of Gamma.
Complex reciprocal_gamma(Complex z);

double gamma(double x);

/// zeta(s) for real s > 1 by Euler-Maclaurin summation (20 terms plus four
/// Bernoulli corrections).
double riemann_zeta(double s);

/// Li_s(z) = sum_{k>=1} z^k / k^s by direct summation for |z| < 1;
/// z = 1 with s > 1 returns zeta(s).
Complex polylog(double s, Complex z);

/// Poisson(lambda) probability of k (lambda = 0 gives the point mass at 0).
double poisson_pmf(double lambda, int k);

double standard_normal_cdf(double x);

} // namespace cyclemeter
