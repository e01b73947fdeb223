#include "cyclemeter/sampler.hpp"

#include "cyclemeter/error.hpp"
#include "cyclemeter/measure.hpp"
#include "cyclemeter/rng.hpp"

#include <algorithm>
#include <string>

namespace cyclemeter {

namespace {
std::size_t idx(int n) { return static_cast<std::size_t>(n); }
} // namespace

CycleSampler::CycleSampler(const WeightSequence& theta, int n) : n_(n) {
    if (n < 1) throw UsageError("sampling needs n >= 1");
    double rho = probability_scale(theta, n);
    auto g = cycle_log_series<double>(theta, n, rho);
    auto h = ts_exp(g);
    if (!(h[n] > 0)) throw DegenerateMeasureError("normalization h_" + std::to_string(n) + " vanishes");
    weight_.assign(idx(n) + 1, 0.0);
    h_.assign(h.coefficients().begin(), h.coefficients().end());
    for (int j = 1; j <= n; ++j) weight_[idx(j)] = g[j] * j;
}

int CycleSampler::draw_length(int remaining, double u) const {
    double target = u * remaining * h_[idx(remaining)];
    int last_positive = 0;
    for (int j = 1; j <= remaining; ++j) {
        double p = weight_[idx(j)] * h_[idx(remaining - j)];
        if (p <= 0) continue;
        last_positive = j;
        if (target < p) return j;
        target -= p;
    }
    // Rounding left a sliver of mass; it belongs to the last admissible length.
    return last_positive;
}

std::vector<int> CycleSampler::sample_permutation(std::uint64_t seed) const {
    SplitMix64 rng(seed);
    std::vector<int> image(idx(n_), 0);
    std::vector<int> pool(idx(n_));
    for (int i = 0; i < n_; ++i) pool[idx(i)] = i + 1;
    std::size_t begin = 0;  // pool[begin..] are unused labels, pool[begin] the smallest
    while (begin < pool.size()) {
        int remaining = static_cast<int>(pool.size() - begin);
        int j = draw_length(remaining, rng.uniform());
        // Partial Fisher-Yates: pool[begin+1 .. begin+j-1] become the other members, in cycle order.
        for (int i = 1; i < j; ++i) {
            std::size_t pick = begin + idx(i) + rng.below(static_cast<std::uint64_t>(remaining - i));
            std::swap(pool[begin + idx(i)], pool[pick]);
        }
        for (int i = 0; i < j; ++i) {
            int from = pool[begin + idx(i)];
            int to = pool[begin + idx((i + 1) % j)];
            image[idx(from - 1)] = to;
        }
        begin += idx(j);
        if (begin < pool.size()) {
            auto smallest = std::min_element(pool.begin() + static_cast<std::ptrdiff_t>(begin), pool.end());
            std::iter_swap(pool.begin() + static_cast<std::ptrdiff_t>(begin), smallest);
        }
    }
    return image;
}

Partition CycleSampler::sample_cycle_type(std::uint64_t seed) const {
    return cycle_type_of(sample_permutation(seed));
}

std::vector<int> sample_permutation(const WeightSequence& theta, int n, std::uint64_t seed) {
    return CycleSampler(theta, n).sample_permutation(seed);
}

Partition sample_cycle_type(const WeightSequence& theta, int n, std::uint64_t seed) {
    return CycleSampler(theta, n).sample_cycle_type(seed);
}

Partition cycle_type_of(const std::vector<int>& permutation) {
    const int n = static_cast<int>(permutation.size());
    std::vector<char> seen(idx(n), 0);
    std::vector<int> lengths;
    for (int start = 1; start <= n; ++start) {
        if (seen[idx(start - 1)]) continue;
        int len = 0;
        int cur = start;
        while (!seen[idx(cur - 1)]) {
            seen[idx(cur - 1)] = 1;
            cur = permutation[idx(cur - 1)];
            if (cur < 1 || cur > n) throw UsageError("not a permutation of 1..n");
            ++len;
        }
        if (cur != start) throw UsageError("not a permutation of 1..n");
        lengths.push_back(len);
    }
    return Partition::from_unsorted(std::move(lengths));
}

std::vector<Partition> sample_cycle_types(const CycleSampler& sampler, std::size_t count, std::uint64_t seed) {
    std::vector<Partition> out(count);
    const long total = static_cast<long>(count);
#pragma omp parallel for schedule(static)
    for (long i = 0; i < total; ++i) {
        out[static_cast<std::size_t>(i)] = sampler.sample_cycle_type(stream_seed(seed, static_cast<std::uint64_t>(i)));
    }
    return out;
}

std::vector<std::vector<int>> sample_permutations(const CycleSampler& sampler, std::size_t count,
                                                  std::uint64_t seed) {
    std::vector<std::vector<int>> out(count);
    const long total = static_cast<long>(count);
#pragma omp parallel for schedule(static)
    for (long i = 0; i < total; ++i) {
        out[static_cast<std::size_t>(i)] = sampler.sample_permutation(stream_seed(seed, static_cast<std::uint64_t>(i)));
    }
    return out;
}

namespace serial {

std::vector<Partition> sample_cycle_types(const CycleSampler& sampler, std::size_t count, std::uint64_t seed) {
    std::vector<Partition> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(sampler.sample_cycle_type(stream_seed(seed, i)));
    return out;
}

} // namespace serial

} // namespace cyclemeter
