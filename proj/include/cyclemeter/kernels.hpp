#pragma once

// Data-parallel inner loops. Each kernel has a serial reference in
// kernels::serial and an OpenMP version in kernels::omp. Exact scalars give
// identical results; double reductions use a thread-count independent order
// and may differ from the serial sum in the last bits.

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace cyclemeter::kernels {

/// Multiplicative increment for placing the c-th part of size m.
template <class T>
using PartFactor = std::function<T(int m, int c)>;

namespace serial {

/// Rows 0..order of exp(u g(t)) given kg[k] = k * g_k; row n has n+1 entries.
template <class T>
std::vector<std::vector<T>> exp_wg_table(std::span<const T> kg, int order);

/// Sum over partitions of n of the product of part factors, one entry per
/// largest part (index p-1 holds partitions whose largest part is p).
template <class T>
std::vector<T> partition_sums_by_largest_part(int n, const PartFactor<T>& factor);

/// step * sum_{k=-count}^{count} f(k * step).
std::complex<double> trapezoid(const std::function<std::complex<double>(double)>& f,
                               double step, long count);

} // namespace serial

namespace omp {

template <class T>
std::vector<std::vector<T>> exp_wg_table(std::span<const T> kg, int order);

template <class T>
std::vector<T> partition_sums_by_largest_part(int n, const PartFactor<T>& factor);

std::complex<double> trapezoid(const std::function<std::complex<double>(double)>& f,
                               double step, long count);

} // namespace omp

/// Number of OpenMP threads the omp kernels will use.
int max_threads();

} // namespace cyclemeter::kernels
