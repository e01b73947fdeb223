#pragma once

#include "cyclemeter/pmf.hpp"

namespace cyclemeter {

/// Point metric: sup_j |p{j} - q{j}| over the union of supports.
double d_loc(const IntPmf<double>& p, const IntPmf<double>& q);

/// Kolmogorov distance: sup_j |P(X <= j) - Q(X <= j)|.
double d_K(const IntPmf<double>& p, const IntPmf<double>& q);

/// Total variation: (1/2) sum_j |p{j} - q{j}|.
double total_variation(const IntPmf<double>& p, const IntPmf<double>& q);

/// Poisson(lambda) on 0..k_max, cut where the remaining upper tail is below
/// `tail`. `tol` of the result records the discarded mass bound.
IntPmf<double> poisson_distribution(double lambda, double tail = 1e-15);

/// Smallest k with P[Poisson(lambda) > k] < tail.
int poisson_quantile(double lambda, double tail);

} // namespace cyclemeter
