#include "cyclemeter/kernels.hpp"

#include "cyclemeter/rational.hpp"

#include <omp.h>

#include <cstddef>

namespace cyclemeter::kernels {

namespace {

template <class T>
std::vector<std::vector<T>> empty_table(int order) {
    std::vector<std::vector<T>> rows(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) rows[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, T(0));
    rows[0][0] = T(1);
    return rows;
}

// n H_{n,j} = sum_{k=1}^{n-j+1} k g_k H_{n-k,j-1}
template <class T>
T exp_wg_entry(std::span<const T> kg, const std::vector<std::vector<T>>& rows, int n, int j) {
    T acc(0);
    for (int k = 1; k <= n - j + 1; ++k) {
        acc += kg[static_cast<std::size_t>(k)] * rows[static_cast<std::size_t>(n - k)][static_cast<std::size_t>(j - 1)];
    }
    acc /= T(n);
    return acc;
}

template <class T>
void partitions_below(int remaining, int max_part, int last_part, int last_count, const T& weight,
                      const PartFactor<T>& factor, T& acc) {
    if (remaining == 0) {
        acc += weight;
        return;
    }
    for (int m = std::min(max_part, remaining); m >= 1; --m) {
        int c = (m == last_part) ? last_count + 1 : 1;
        T next = weight * factor(m, c);
        partitions_below(remaining - m, m, m, c, next, factor, acc);
    }
}

template <class T>
T partition_sum_with_largest(int n, int p, const PartFactor<T>& factor) {
    T acc(0);
    T first = factor(p, 1);
    partitions_below(n - p, p, p, 1, first, factor, acc);
    return acc;
}

} // namespace

namespace serial {

template <class T>
std::vector<std::vector<T>> exp_wg_table(std::span<const T> kg, int order) {
    auto rows = empty_table<T>(order);
    for (int n = 1; n <= order; ++n) {
        for (int j = 1; j <= n; ++j) {
            rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)] = exp_wg_entry(kg, rows, n, j);
        }
    }
    return rows;
}

template <class T>
std::vector<T> partition_sums_by_largest_part(int n, const PartFactor<T>& factor) {
    std::vector<T> sums(static_cast<std::size_t>(n), T(0));
    for (int p = 1; p <= n; ++p) sums[static_cast<std::size_t>(p - 1)] = partition_sum_with_largest(n, p, factor);
    return sums;
}

std::complex<double> trapezoid(const std::function<std::complex<double>(double)>& f, double step,
                               long count) {
    std::complex<double> acc = f(0.0);
    for (long k = 1; k <= count; ++k) {
        double y = static_cast<double>(k) * step;
        acc += f(y) + f(-y);
    }
    return acc * step;
}

} // namespace serial

namespace omp {

template <class T>
std::vector<std::vector<T>> exp_wg_table(std::span<const T> kg, int order) {
    auto rows = empty_table<T>(order);
    for (int n = 1; n <= order; ++n) {
        auto& row = rows[static_cast<std::size_t>(n)];
#pragma omp parallel for schedule(static) if (n >= 64)
        for (int j = 1; j <= n; ++j) {
            row[static_cast<std::size_t>(j)] = exp_wg_entry(kg, rows, n, j);
        }
    }
    return rows;
}

template <class T>
std::vector<T> partition_sums_by_largest_part(int n, const PartFactor<T>& factor) {
    std::vector<T> sums(static_cast<std::size_t>(n), T(0));
#pragma omp parallel for schedule(dynamic, 1)
    for (int p = 1; p <= n; ++p) {
        sums[static_cast<std::size_t>(p - 1)] = partition_sum_with_largest(n, p, factor);
    }
    return sums;
}

std::complex<double> trapezoid(const std::function<std::complex<double>(double)>& f, double step,
                               long count) {
    // Fixed-size blocks summed in index order keep the result independent of
    // the thread count.
    constexpr long block = 4096;
    long blocks = (count + block - 1) / block;
    std::vector<std::complex<double>> partial(static_cast<std::size_t>(blocks));
#pragma omp parallel for schedule(static)
    for (long b = 0; b < blocks; ++b) {
        std::complex<double> acc(0.0, 0.0);
        long hi = std::min(count, (b + 1) * block);
        for (long k = b * block + 1; k <= hi; ++k) {
            double y = static_cast<double>(k) * step;
            acc += f(y) + f(-y);
        }
        partial[static_cast<std::size_t>(b)] = acc;
    }
    std::complex<double> total = f(0.0);
    for (const auto& p : partial) total += p;
    return total * step;
}

} // namespace omp

int max_threads() { return omp_get_max_threads(); }

#define CYCLEMETER_INSTANTIATE(T)                                                                   \
    template std::vector<std::vector<T>> serial::exp_wg_table<T>(std::span<const T>, int);         \
    template std::vector<std::vector<T>> omp::exp_wg_table<T>(std::span<const T>, int);            \
    template std::vector<T> serial::partition_sums_by_largest_part<T>(int, const PartFactor<T>&);  \
    template std::vector<T> omp::partition_sums_by_largest_part<T>(int, const PartFactor<T>&);

CYCLEMETER_INSTANTIATE(double)
CYCLEMETER_INSTANTIATE(Rational)

#undef CYCLEMETER_INSTANTIATE

} // namespace cyclemeter::kernels
