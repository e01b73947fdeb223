#pragma once

#include "cyclemeter/catalog.hpp"
#include "cyclemeter/partitions.hpp"
#include "cyclemeter/pmf.hpp"
#include "cyclemeter/rational.hpp"
#include "cyclemeter/series.hpp"
#include "cyclemeter/singularity_class.hpp"
#include "cyclemeter/weights.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace cyclemeter {

/// Weights F_m(k) of the generalized measure P_F, where a permutation with
/// cycle counts c_m has weight prod_m F_m(c_m). F_m(0) = 1 and every value
/// is positive; both are checked on evaluation.
class GeneralizedWeights {
public:
    using DoubleRule = std::function<double(int m, int k)>;
    using ExactRule = std::function<Rational(int m, int k)>;

    GeneralizedWeights(std::string name, DoubleRule eval, ExactRule exact = {});

    /// F_m(k) = theta_m^k, the measure P_Theta.
    static GeneralizedWeights from_weight_sequence(const WeightSequence& theta);

    const std::string& name() const { return name_; }
    double operator()(int m, int k) const;
    Rational exact(int m, int k) const;

    template <class T>
    T at(int m, int k) const {
        if constexpr (std::is_same_v<T, Rational>) {
            return exact(m, k);
        } else {
            return (*this)(m, k);
        }
    }

private:
    std::string name_;
    DoubleRule eval_;
    ExactRule exact_;
};

/// EG(F_m, x) = sum_k F_m(k) x^k / k!, truncated after x^x_trunc.
template <class T>
TruncatedSeries<T> eg_series(const GeneralizedWeights& F, int m, int x_trunc);

/// h_0(F)..h_N(F) from sum_n h_n(F) t^n = prod_m EG(F_m, t^m/m).
template <class T>
std::vector<T> generalized_normalization(const GeneralizedWeights& F, int N);

/// Joint law of (C_1..C_b) under P_F, tuples in ascending lexicographic order:
/// prod_{m<=b} F_m(c_m)/(c_m! m^{c_m}) [t^{n - sum m c_m}] prod_{m>b} EG(F_m, t^m/m) / h_n(F).
template <class T>
TuplePmf<T> generalized_joint_cycle_pmf(const GeneralizedWeights& F, int n, int b);

/// Law of K_0n under P_F on k = 1..n, from [u^k t^n] prod_m EG(F_m, u t^m/m).
template <class T>
IntPmf<T> generalized_total_cycles_pmf(const GeneralizedWeights& F, int n);

/// Brute-force measure over partitions of n with weight
/// prod_m F_m(c_m) / (c_m! m^{c_m}).
template <class T>
PartitionOracle<T> generalized_partition_oracle(const GeneralizedWeights& F, int n,
                                                int limit = kDefaultEnumerationLimit);

/// Marginal of (c_1..c_b) of a cycle-type law, over every tuple with
/// sum m c_m <= n (zeros included), ascending lexicographic order.
template <class T>
TuplePmf<T> cycle_count_marginal(const Pmf<Partition, T>& law, int n, int b);

/// Marginal of the number of parts on 1..n.
template <class T>
IntPmf<T> length_marginal(const Pmf<Partition, T>& law, int n);

/// F_m(k) = k! [x^k] exp(P(x)) with P(x) = theta x + sum_{j>=2} b_j x^j
/// (poly = {theta, b_2, ..., b_d}; theta > 0, b_j >= 0). F_m does not
/// depend on m; values are extracted once per backend and cached.
GeneralizedWeights exp_polynomial_weights(const std::vector<Rational>& poly);

/// -theta log(1 - t) + sum_j b_j Li_j(t^j) truncated at N: the log of the
/// normalization series of the exp-polynomial measure.
template <class T>
TruncatedSeries<T> exp_polynomial_log_series(const std::vector<Rational>& poly, int N);

/// Class F(1, theta) with K = sum_j b_j zeta(j).
SingularityClass exp_polynomial_class(const std::vector<Rational>& poly);

/// Lattice model of spatial random permutations with a fixed finite lattice.
/// alpha_m = alpha[m-1], and the last entry for larger m.
struct SpatialModel {
    std::vector<double> alpha;
    std::vector<double> eps_values;
    std::string truncation_note;
    /// Optional exact e^{-alpha_m} (same length as alpha) and e^{-eps(k)}.
    std::optional<std::vector<Rational>> exact_alpha_factors;
    std::optional<std::vector<Rational>> exact_boltzmann;

    /// Model given by exact factors e^{-alpha_m} and e^{-eps(k)}.
    static SpatialModel from_factors(std::vector<Rational> alpha_factors, std::vector<Rational> boltzmann,
                                     std::string truncation_note = {});

    double alpha_at(int m) const;
};

/// theta'_m = e^{-alpha_m} sum_k e^{-eps(k) m}; the spatial P_F equals P_Theta'.
WeightSequence spatial_effective_weights(const SpatialModel& model);

/// F_m(c) = theta'_m^c.
GeneralizedWeights spatial_generalized_weights(const SpatialModel& model);

/// Class of the effective g given the class F(r, a) of g^(alpha)(t) = sum e^{-alpha_m} t^m/m:
/// radius r~ r with r~ = min e^{eps(k)}, strength A a with A the multiplicity
/// of the minimum, K = A K_base + sum over the other points of g^(alpha)(e^{-eps(k)} r~ r).
SingularityClass spatial_class_params(const SpatialModel& model, const SingularityClass& base);

/// Class of g^(alpha) for the stored alpha sequence: F(1, e^{-alpha_last}, K)
/// with K = sum_m (e^{-alpha_m} - e^{-alpha_last})/m.
SingularityClass spatial_base_class(const SpatialModel& model);

/// Effective weights with the aggregated class attached.
WeightFamily spatial_family(const SpatialModel& model);

} // namespace cyclemeter
