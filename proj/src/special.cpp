#include "cyclemeter/special.hpp"

#include "cyclemeter/error.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace cyclemeter {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
};

bool is_nonpositive_integer(Complex z) {
    return z.imag() == 0 && z.real() <= 0 && std::floor(z.real()) == z.real();
}

// Gamma for Re z >= 1/2.
Complex lanczos_gamma(Complex z) {
    z -= 1.0;
    Complex sum = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) sum += kLanczos[i] / (z + static_cast<double>(i));
    Complex t = z + kLanczosG + 0.5;
    return std::sqrt(2 * std::numbers::pi) * std::exp((z + 0.5) * std::log(t) - t) * sum;
}

// sin(pi z), exact zeros at integers on the real axis.
Complex sin_pi(Complex z) {
    if (z.imag() == 0 && std::floor(z.real()) == z.real()) return 0.0;
    return std::sin(std::numbers::pi * z);
}

} // namespace

Complex complex_gamma(Complex z) {
    if (is_nonpositive_integer(z)) {
        throw PoleError("Gamma has a pole at " + std::to_string(z.real()));
    }
    if (z.real() < 0.5) {
        return std::numbers::pi / (sin_pi(z) * lanczos_gamma(1.0 - z));
    }
    return lanczos_gamma(z);
}

Complex reciprocal_gamma(Complex z) {
    if (is_nonpositive_integer(z)) return 0.0;
    if (z.real() < 0.5) return sin_pi(z) * lanczos_gamma(1.0 - z) / std::numbers::pi;
    return 1.0 / lanczos_gamma(z);
}

double gamma(double x) { return complex_gamma(Complex(x, 0.0)).real(); }

double riemann_zeta(double s) {
    if (!(s > 1)) throw UsageError("riemann_zeta needs s > 1");
    constexpr int N = 20;
    // B_2, B_4, B_6, B_8
    constexpr std::array<double, 4> bernoulli = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30};
    double sum = 0;
    for (int k = N - 1; k >= 1; --k) sum += std::pow(static_cast<double>(k), -s);
    const double n = N;
    sum += std::pow(n, 1 - s) / (s - 1) + 0.5 * std::pow(n, -s);
    // B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^{-s-2j+1}
    double rising = s;
    double factorial = 2;
    double power = std::pow(n, -s - 1);
    for (std::size_t j = 1; j <= bernoulli.size(); ++j) {
        sum += bernoulli[j - 1] / factorial * rising * power;
        double a = static_cast<double>(2 * j);
        rising *= (s + a - 1) * (s + a);
        factorial *= (a + 1) * (a + 2);
        power /= n * n;
    }
    return sum;
}

Complex polylog(double s, Complex z) {
    if (z == Complex(1.0, 0.0)) {
        if (s > 1) return riemann_zeta(s);
        throw UsageError("polylog diverges at z = 1 for s <= 1");
    }
    if (!(std::abs(z) < 1)) throw UsageError("polylog series needs |z| < 1");
    Complex sum = 0;
    Complex power = 1;
    for (int k = 1; k < 100000; ++k) {
        power *= z;
        Complex term = power * std::pow(static_cast<double>(k), -s);
        sum += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum)) return sum;
    }
    throw ConvergenceError("polylog series did not converge");
}

double poisson_pmf(double lambda, int k) {
    if (lambda < 0) throw UsageError("Poisson mean must be nonnegative");
    if (k < 0) return 0;
    if (lambda == 0) return k == 0 ? 1.0 : 0.0;
    return std::exp(-lambda + k * std::log(lambda) - std::lgamma(k + 1.0));
}

double standard_normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

} // namespace cyclemeter
