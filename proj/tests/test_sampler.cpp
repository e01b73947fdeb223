#include "cyclemeter/error.hpp"
#include "cyclemeter/measure.hpp"
#include "cyclemeter/partitions.hpp"
#include "cyclemeter/rng.hpp"
#include "cyclemeter/sampler.hpp"

#include "chi_square.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

using namespace cyclemeter;

TEST_CASE("SplitMix64 reference outputs") {
    SplitMix64 rng(1234567);
    CHECK(rng() == 6457827717110365317ULL);
    CHECK(rng() == 3203168211198807973ULL);
    CHECK(rng() == 9817491932198370423ULL);
}

TEST_CASE("n = 1 gives the identity") {
    auto theta = WeightSequence::constant(3);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        CHECK(sample_permutation(theta, 1, seed) == std::vector<int>{1});
        CHECK(sample_cycle_type(theta, 1, seed) == Partition({1}));
    }
}

TEST_CASE("samples are permutations and deterministic") {
    CycleSampler sampler(WeightSequence::constant(testing_support::q("3/2")), 30);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto p = sampler.sample_permutation(seed);
        std::set<int> image(p.begin(), p.end());
        CHECK(image.size() == 30);
        CHECK(*image.begin() == 1);
        CHECK(*image.rbegin() == 30);
        CHECK(p == sampler.sample_permutation(seed));
        CHECK(cycle_type_of(p) == sampler.sample_cycle_type(seed));
    }
    auto a = sample_cycle_types(sampler, 500, 9);
    CHECK(a == sample_cycle_types(sampler, 500, 9));
    CHECK(a == serial::sample_cycle_types(sampler, 500, 9));
    CHECK(a != sample_cycle_types(sampler, 500, 10));
}

TEST_CASE("zero weights exclude cycle lengths") {
    auto theta = WeightSequence::from_values({1, 0, 2}, 1);
    CycleSampler sampler(theta, 12);
    for (const auto& lambda : sample_cycle_types(sampler, 2000, 3)) {
        for (int part : lambda.parts()) CHECK(part != 2);
    }
}

TEST_CASE("degenerate measure is refused") {
    CHECK_THROWS_AS(CycleSampler(WeightSequence::from_values({0, 1}, 0), 3), DegenerateMeasureError);
}

TEST_CASE("uniform sampler hits every permutation of S_5 evenly") {
    CycleSampler sampler(WeightSequence::constant(1), 5);
    const int N = 100000;
    std::map<std::vector<int>, int> counts;
    for (const auto& p : sample_permutations(sampler, N, 2024)) ++counts[p];
    CHECK(counts.size() == 120);
    const double mean = N / 120.0;
    const double sd = std::sqrt(N * (1.0 / 120) * (119.0 / 120));
    for (const auto& [p, c] : counts) CHECK(std::abs(c - mean) <= 4 * sd);
}

TEST_CASE("cycle-type frequencies pass chi-square against the exact law") {
    for (int thetanum : {1, 2}) {
        auto theta = WeightSequence::constant(thetanum);
        auto exact = brute_force_cycle_type_pmf<double>(theta, 8).pmf;
        CycleSampler sampler(theta, 8);
        std::map<Partition, double> counts;
        const int N = 100000;
        for (const auto& lambda : sample_cycle_types(sampler, N, 77)) counts[lambda] += 1;
        std::vector<double> obs, prob;
        for (std::size_t i = 0; i < exact.size(); ++i) {
            obs.push_back(counts[exact.support[i]]);
            prob.push_back(exact.mass[i]);
        }
        CHECK(testing_support::chi_square_p_value(obs, prob, N) > 1e-3);

        // The law of K as well.
        auto k = total_cycles_pmf<double>(theta, 8);
        std::vector<double> kobs(8, 0);
        for (const auto& [lambda, c] : counts) kobs[lambda.length() - 1] += c;
        CHECK(testing_support::chi_square_p_value(kobs, k.mass, N) > 1e-3);
    }
}
