#include "cyclemeter/partitions.hpp"

#include "cyclemeter/error.hpp"
#include "cyclemeter/kernels.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace cyclemeter {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw UsageError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw UsageError("partition parts must be nonincreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

std::vector<int> Partition::cycle_counts() const {
    std::vector<int> c(static_cast<std::size_t>(size_) + 1, 0);
    for (int p : parts_) ++c[static_cast<std::size_t>(p)];
    return c;
}

namespace {

void require_enumerable(int n, int limit) {
    if (n < 0) throw UsageError("partitions of a negative integer");
    if (n > limit) {
        throw ResourceError("partition enumeration of n = " + std::to_string(n) + " exceeds the limit " +
                            std::to_string(limit));
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int n, int limit) {
    require_enumerable(n, limit);
    std::vector<Partition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> a{n};
    while (true) {
        out.emplace_back(a);
        // Rightmost part larger than one.
        int i = static_cast<int>(a.size()) - 1;
        while (i >= 0 && a[static_cast<std::size_t>(i)] == 1) --i;
        if (i < 0) break;
        int spill = static_cast<int>(a.size()) - i;  // ones after i, plus the unit removed from a[i]
        int cap = --a[static_cast<std::size_t>(i)];
        a.resize(static_cast<std::size_t>(i) + 1);
        while (spill > 0) {
            int part = std::min(cap, spill);
            a.push_back(part);
            spill -= part;
        }
    }
    return out;
}

mpz_class z_of(const Partition& lambda) {
    mpz_class z = 1;
    auto counts = lambda.cycle_counts();
    for (std::size_t m = 1; m < counts.size(); ++m) {
        unsigned long c = static_cast<unsigned long>(counts[m]);
        if (c == 0) continue;
        mpz_class power, fact;
        mpz_ui_pow_ui(power.get_mpz_t(), m, c);
        mpz_fac_ui(fact.get_mpz_t(), c);
        z *= power * fact;
    }
    return z;
}

mpz_class conjugacy_class_size(const Partition& lambda) {
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(lambda.size()));
    return fact / z_of(lambda);
}

std::vector<mpz_class> partition_counts_pentagonal(int n) {
    if (n < 0) throw UsageError("partition counts of a negative integer");
    std::vector<mpz_class> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int k = 1; k <= n; ++k) {
        mpz_class acc = 0;
        for (int j = 1;; ++j) {
            int g1 = j * (3 * j - 1) / 2;
            if (g1 > k) break;
            int g2 = j * (3 * j + 1) / 2;
            mpz_class term = p[static_cast<std::size_t>(k - g1)];
            if (g2 <= k) term += p[static_cast<std::size_t>(k - g2)];
            if (j % 2 == 1) {
                acc += term;
            } else {
                acc -= term;
            }
        }
        p[static_cast<std::size_t>(k)] = acc;
    }
    return p;
}

template <class T>
PartitionOracle<T> brute_force_partition_measure(int n, const CycleCountWeight<T>& weight, int limit) {
    auto partitions = enumerate_partitions(n, limit);
    std::vector<T> raw;
    raw.reserve(partitions.size());
    T total(0);
    for (const auto& lambda : partitions) {
        auto counts = lambda.cycle_counts();
        T w(1);
        for (std::size_t m = 1; m < counts.size(); ++m) {
            if (counts[m] > 0) w *= weight(static_cast<int>(m), counts[m]);
        }
        total += w;
        raw.push_back(w);
    }
    if (total == 0) throw DegenerateMeasureError("every partition of " + std::to_string(n) + " has zero weight");

    // Ascending support order for Pmf lookups.
    std::vector<std::size_t> order(partitions.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return partitions[a] < partitions[b]; });

    PartitionOracle<T> out{{}, total};
    out.pmf.support.reserve(order.size());
    out.pmf.mass.reserve(order.size());
    for (std::size_t i : order) {
        out.pmf.support.push_back(partitions[i]);
        T m = raw[i];
        m /= total;
        out.pmf.mass.push_back(m);
    }
    out.pmf.tol = std::is_same_v<T, Rational> ? 0.0 : 1e-12;
    return out;
}

namespace {

// theta_m^c / (m^c c!)
template <class T>
CycleCountWeight<T> theta_cycle_weight(const WeightSequence& theta) {
    return [&theta](int m, int c) {
        T a = theta.at<T>(m);
        a /= T(m);
        T w(1);
        for (int i = 1; i <= c; ++i) {
            w *= a;
            w /= T(i);
        }
        return w;
    };
}

} // namespace

template <class T>
PartitionOracle<T> brute_force_cycle_type_pmf(const WeightSequence& theta, int n, int limit) {
    if (n < 1) throw UsageError("cycle-type law needs n >= 1");
    return brute_force_partition_measure<T>(n, theta_cycle_weight<T>(theta), limit);
}

template <class T>
IntPmf<T> brute_force_k_pmf(const WeightSequence& theta, int n, int limit) {
    auto oracle = brute_force_cycle_type_pmf<T>(theta, n, limit);
    std::map<int, T> by_k;
    for (std::size_t i = 0; i < oracle.pmf.size(); ++i) {
        auto [it, inserted] = by_k.try_emplace(oracle.pmf.support[i].length(), T(0));
        it->second += oracle.pmf.mass[i];
    }
    IntPmf<T> out;
    for (auto& [k, m] : by_k) {
        out.support.push_back(k);
        out.mass.push_back(m);
    }
    out.tol = oracle.pmf.tol;
    return out;
}

template <class T>
T brute_force_normalization(const WeightSequence& theta, int n, int limit) {
    require_enumerable(n, limit);
    if (n == 0) return T(1);
    std::vector<T> a(static_cast<std::size_t>(n) + 1, T(0));
    for (int m = 1; m <= n; ++m) {
        a[static_cast<std::size_t>(m)] = theta.at<T>(m);
        a[static_cast<std::size_t>(m)] /= T(m);
    }
    // c-th copy of a part of size m contributes (theta_m/m)/c.
    kernels::PartFactor<T> factor = [&a](int m, int c) {
        T f = a[static_cast<std::size_t>(m)];
        f /= T(c);
        return f;
    };
    auto sums = kernels::omp::partition_sums_by_largest_part<T>(n, factor);
    T total(0);
    for (const auto& s : sums) total += s;
    return total;
}

#define CYCLEMETER_INSTANTIATE(T)                                                                             \
    template PartitionOracle<T> brute_force_partition_measure<T>(int, const CycleCountWeight<T>&, int);       \
    template PartitionOracle<T> brute_force_cycle_type_pmf<T>(const WeightSequence&, int, int);               \
    template IntPmf<T> brute_force_k_pmf<T>(const WeightSequence&, int, int);                                 \
    template T brute_force_normalization<T>(const WeightSequence&, int, int);

CYCLEMETER_INSTANTIATE(double)
CYCLEMETER_INSTANTIATE(Rational)

#undef CYCLEMETER_INSTANTIATE

} // namespace cyclemeter
