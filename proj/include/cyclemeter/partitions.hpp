#pragma once

#include "cyclemeter/pmf.hpp"
#include "cyclemeter/rational.hpp"
#include "cyclemeter/weights.hpp"

#include <compare>
#include <functional>
#include <vector>

namespace cyclemeter {

/// Integer partition lambda_1 >= ... >= lambda_l > 0, i.e. a cycle type.
class Partition {
public:
    Partition() = default;
    /// Validates that parts are positive and nonincreasing.
    explicit Partition(std::vector<int> parts);
    /// Sorts arbitrary positive parts into a partition.
    static Partition from_unsorted(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }

    /// c_m(lambda) for m = 0..size (index 0 unused).
    std::vector<int> cycle_counts() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    // Lexicographic on parts, so sorted containers list (1,1,1) before (2,1).
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

inline constexpr int kDefaultEnumerationLimit = 80;

/// All partitions of n in lexicographically descending order:
/// (n), (n-1,1), ..., (1,...,1). n = 0 yields the empty partition.
std::vector<Partition> enumerate_partitions(int n, int limit = kDefaultEnumerationLimit);

/// z_lambda = prod_m m^{c_m} c_m!; the conjugacy class has |lambda|!/z_lambda elements.
mpz_class z_of(const Partition& lambda);
mpz_class conjugacy_class_size(const Partition& lambda);

/// Partition-count recurrence p(0..n) via Euler's pentagonal numbers.
std::vector<mpz_class> partition_counts_pentagonal(int n);

/// Weight of c cycles of length m. The measure of lambda is
/// prod_m weight(m, c_m) / normalization.
template <class T>
using CycleCountWeight = std::function<T(int m, int c)>;

template <class T>
struct PartitionOracle {
    Pmf<Partition, T> pmf;
    T normalization;
};

/// Brute-force measure over partitions of n with weight prod_m weight(m, c_m).
template <class T>
PartitionOracle<T> brute_force_partition_measure(int n, const CycleCountWeight<T>& weight,
                                                 int limit = kDefaultEnumerationLimit);

/// Cycle-type law under P_Theta: P[lambda] = prod theta_{lambda_i} / (h_n z_lambda).
template <class T>
PartitionOracle<T> brute_force_cycle_type_pmf(const WeightSequence& theta, int n,
                                              int limit = kDefaultEnumerationLimit);

/// Law of the number of cycles l(lambda) under the brute-force cycle-type law.
template <class T>
IntPmf<T> brute_force_k_pmf(const WeightSequence& theta, int n, int limit = kDefaultEnumerationLimit);

/// h_n as the raw sum over partitions of prod theta_{lambda_i} / z_lambda,
/// chunked by largest part on the OpenMP kernel.
template <class T>
T brute_force_normalization(const WeightSequence& theta, int n, int limit = kDefaultEnumerationLimit);

} // namespace cyclemeter
