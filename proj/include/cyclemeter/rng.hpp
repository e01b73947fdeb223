#pragma once

#include <cstdint>
#include <limits>

namespace cyclemeter {

/// SplitMix64: a counter-based generator. The state after k draws is
/// seed + k * golden, so streams are derived by hashing (seed, index) and
/// sample i of a batch is reproducible regardless of thread scheduling.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    /// Uniform on {0, ..., bound-1} by rejection (no modulo bias).
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = max() - max() % bound;
        std::uint64_t x;
        do {
            x = (*this)();
        } while (x >= limit);
        return x % bound;
    }

private:
    std::uint64_t state_;
};

/// Seed of stream `index` under a master seed.
inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mix(seed ^ (0xD1B54A32D192ED03ULL * (index + 1)));
    mix();
    return mix();
}

} // namespace cyclemeter
