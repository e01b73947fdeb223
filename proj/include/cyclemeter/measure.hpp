#pragma once

#include "cyclemeter/pmf.hpp"
#include "cyclemeter/rational.hpp"
#include "cyclemeter/series.hpp"
#include "cyclemeter/weights.hpp"

#include <span>
#include <vector>

namespace cyclemeter {

/// g_Theta(t) = sum_k theta_k t^k / k truncated at N, with t replaced by
/// scale * t (scale = 1 gives g_Theta itself).
template <class T>
TruncatedSeries<T> cycle_log_series(const WeightSequence& theta, int N, const T& scale = T(1));

/// h_0..h_N with sum h_n t^n = exp(g_Theta(t)); h_0 = 1.
template <class T>
std::vector<T> normalization_constants(const WeightSequence& theta, int N);

/// Variable substitution t -> rho t applied by the double path before
/// extracting probabilities. Every pmf is invariant under it, and choosing
/// rho near the radius of convergence keeps h_n rho^n representable.
/// Exact computations always use rho = 1.
double probability_scale(const WeightSequence& theta, int n);

/// Joint law of (C_1, ..., C_b) over every tuple with sum m c_m <= n:
/// P = prod_{m<=b} (theta_m/m)^{c_m}/c_m! * [t^{n-sum m c_m}] exp(sum_{m>b} theta_m t^m/m) / h_n.
/// Tuples are listed in ascending lexicographic order, zero masses included.
template <class T>
TuplePmf<T> joint_cycle_pmf(const WeightSequence& theta, int n, int b);

/// Law of K_0n (the number of cycles) on k = 1..n, from [t^n u^k] exp(u g_Theta(t)) / h_n.
template <class T>
IntPmf<T> total_cycles_pmf(const WeightSequence& theta, int n);

/// total_cycles_pmf for several n from one bivariate table up to max(ns).
template <class T>
std::vector<IntPmf<T>> total_cycles_pmfs(const WeightSequence& theta, std::span<const int> ns);

/// E[C_m] = (theta_m/m) h_{n-m} / h_n for m = 1..n (index 0 unused).
template <class T>
std::vector<T> expected_cycle_counts(const WeightSequence& theta, int n);

} // namespace cyclemeter
