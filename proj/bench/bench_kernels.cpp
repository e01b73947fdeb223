// Serial reference kernels against their OpenMP versions.

#include "cyclemeter/kernels.hpp"
#include "cyclemeter/rational.hpp"
#include "cyclemeter/sampler.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

namespace k = cyclemeter::kernels;

namespace {

std::vector<double> kg(int order) {
    std::vector<double> v(order + 1, 0.0);
    for (int j = 1; j <= order; ++j) v[j] = 1.0 + 0.5 / j;
    return v;
}

template <bool Parallel>
void BM_exp_wg_table(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    auto v = kg(order);
    for (auto _ : state) {
        auto t = Parallel ? k::omp::exp_wg_table<double>(v, order) : k::serial::exp_wg_table<double>(v, order);
        benchmark::DoNotOptimize(t);
    }
}

template <bool Parallel>
void BM_partition_sums(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    k::PartFactor<cyclemeter::Rational> f = [](int m, int c) { return cyclemeter::Rational(m + 1, m * c); };
    for (auto _ : state) {
        auto s = Parallel ? k::omp::partition_sums_by_largest_part(n, f) : k::serial::partition_sums_by_largest_part(n, f);
        benchmark::DoNotOptimize(s);
    }
}

template <bool Parallel>
void BM_trapezoid(benchmark::State& state) {
    auto f = [](double y) { return std::complex<double>(std::exp(-y * y) * std::cos(y), 0.0); };
    const long count = state.range(0);
    for (auto _ : state) {
        auto r = Parallel ? k::omp::trapezoid(f, 10.0 / count, count) : k::serial::trapezoid(f, 10.0 / count, count);
        benchmark::DoNotOptimize(r);
    }
}

template <bool Parallel>
void BM_sample_cycle_types(benchmark::State& state) {
    cyclemeter::CycleSampler sampler(cyclemeter::WeightSequence::constant(2), 200);
    const auto count = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto s = Parallel ? cyclemeter::sample_cycle_types(sampler, count, 1)
                          : cyclemeter::serial::sample_cycle_types(sampler, count, 1);
        benchmark::DoNotOptimize(s);
    }
}

} // namespace

BENCHMARK(BM_exp_wg_table<false>)->Arg(500)->Arg(1500)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_exp_wg_table<true>)->Arg(500)->Arg(1500)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_partition_sums<false>)->Arg(30)->Arg(45)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_partition_sums<true>)->Arg(30)->Arg(45)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_trapezoid<false>)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_trapezoid<true>)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sample_cycle_types<false>)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sample_cycle_types<true>)->Arg(10000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
