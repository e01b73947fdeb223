#pragma once

#include "cyclemeter/partitions.hpp"
#include "cyclemeter/weights.hpp"

#include <cstdint>
#include <vector>

namespace cyclemeter {

/// Exact sampler for P_Theta on S_n. The cycle through the smallest unused
/// label has length j with probability theta_j h_{m-j} / (m h_m) when m
/// labels remain; its other members are a uniformly random ordered choice.
class CycleSampler {
public:
    CycleSampler(const WeightSequence& theta, int n);

    int n() const { return n_; }

    /// sigma(1..n) as a 1-based image vector.
    std::vector<int> sample_permutation(std::uint64_t seed) const;
    Partition sample_cycle_type(std::uint64_t seed) const;

private:
    int draw_length(int remaining, double u) const;

    int n_;
    std::vector<double> weight_;  // theta_j rho^j
    std::vector<double> h_;       // h_m rho^m
};

std::vector<int> sample_permutation(const WeightSequence& theta, int n, std::uint64_t seed);
Partition sample_cycle_type(const WeightSequence& theta, int n, std::uint64_t seed);

/// Cycle type of a permutation given as a 1-based image vector.
Partition cycle_type_of(const std::vector<int>& permutation);

/// Batch draws: sample i uses stream_seed(seed, i).
std::vector<Partition> sample_cycle_types(const CycleSampler& sampler, std::size_t count, std::uint64_t seed);
std::vector<std::vector<int>> sample_permutations(const CycleSampler& sampler, std::size_t count,
                                                  std::uint64_t seed);

namespace serial {
std::vector<Partition> sample_cycle_types(const CycleSampler& sampler, std::size_t count, std::uint64_t seed);
} // namespace serial

} // namespace cyclemeter
