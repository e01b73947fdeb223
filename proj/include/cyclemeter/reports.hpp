#pragma once

#include "cyclemeter/catalog.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cyclemeter {

/// One distance sequence over an n grid.
struct ComparisonReport {
    std::string kind;    ///< poisson-vector | mod-poisson | clt | poisson-k
    std::string family;
    std::string metric;  ///< tv | sup-pointwise | sup-char-fn | d_K | d_loc, with variant suffix
    std::vector<int> n_values;
    std::vector<double> values;
    double fitted_slope = 0;     ///< NaN with fewer than two positive values
    std::string reference_rate;  ///< label of the expected decay
    std::vector<double> reference_values;
};

/// Least-squares slope of log(value) against log(n), skipping nonpositive values.
double loglog_slope(std::span<const int> n_values, std::span<const double> values);

/// Nonincreasing except for at most `allowed` steps that rise by no more
/// than `slack` relative.
bool nonincreasing_trend(std::span<const double> values, int allowed = 1, double slack = 0.05);

/// TV and sup-pointwise distance between the exact law of (C_1..C_b) and
/// independent Poisson((theta_m/m) r^m). Needs a declared class.
std::vector<ComparisonReport> poisson_vector_report(const WeightFamily& family, int b,
                                                    std::span<const int> n_values);

/// sup over s of |exp((K + theta log n)(1 - e^{is})) E[e^{is K_0n}] - Gamma(theta)/Gamma(theta e^{is})|.
ComparisonReport mod_poisson_report(const WeightFamily& family, std::span<const int> n_values,
                                    std::span<const double> s_grid);

inline constexpr double kDefaultSGrid[] = {0.0, 0.5, -0.5, 1.0, -1.0, 2.0, -2.0};

/// Kolmogorov distance of (K_0n - theta log n)/sqrt(theta log n) to N(0,1);
/// a second entry uses theta sqrt(log n) as the scale. Requires n >= 2.
std::vector<ComparisonReport> clt_report(const WeightFamily& family, std::span<const int> n_values);

/// d_loc and d_K between K_0n and Poisson(K + theta log n).
std::vector<ComparisonReport> poisson_k_approx_report(const WeightFamily& family,
                                                      std::span<const int> n_values);

struct LargeDeviationReport {
    std::string family;
    int n = 0;
    int k = 0;
    double mean = 0;
    double sd = 0;
    double exact = 0;
    double estimate = 0;
    double direct = 0;
    double relative_error = 0;
    double relative_error_direct = 0;
    double t_n = 0;
    double x = 0;
    double rate = 0;
    double tilt = 0;
};

/// Exact P[K_0n = k] against the main-term estimate. Without `k`, uses
/// k = round(E[K_0n] + sigmas * sd).
LargeDeviationReport large_deviation_report(const WeightFamily& family, int n,
                                            std::optional<int> k, double sigmas = 3);

std::string to_json(const std::vector<ComparisonReport>& reports);
std::string to_csv(const std::vector<ComparisonReport>& reports);
std::string to_json(const LargeDeviationReport& report);
std::string to_csv(const LargeDeviationReport& report);

/// %.17g formatting shared by the CSV writers.
std::string format_number(double x);

} // namespace cyclemeter
