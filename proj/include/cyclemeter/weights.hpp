#pragma once

#include "cyclemeter/rational.hpp"
#include "cyclemeter/singularity_class.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace cyclemeter {

/// The weight sequence theta_1, theta_2, ... of a weighted permutation
/// measure, evaluated lazily. Every queried weight must be nonnegative.
///
/// Two evaluation rules are kept: a double rule, and an exact rule used by
/// the rational backend. When no exact rule is supplied, the exact weight is
/// the binary value of the double weight, so both backends see the same
/// numbers and the exact path stays exact.
class WeightSequence {
public:
    using DoubleRule = std::function<double(int)>;
    using ExactRule = std::function<Rational(int)>;

    WeightSequence(std::string name, DoubleRule eval, ExactRule exact = {},
                   std::optional<SingularityClass> singularity = std::nullopt);

    /// theta_m = theta for every m.
    static WeightSequence constant(const Rational& theta, std::string name = {});
    /// theta_m = values[m-1] for m <= values.size(), `tail` beyond.
    static WeightSequence from_values(std::vector<Rational> values, const Rational& tail = 0,
                                      std::string name = {});

    const std::string& name() const { return name_; }
    const std::optional<SingularityClass>& singularity() const { return singularity_; }
    WeightSequence with_singularity(std::optional<SingularityClass> cls) const;

    double operator()(int m) const;
    Rational exact(int m) const;

    template <class T>
    T at(int m) const {
        if constexpr (std::is_same_v<T, Rational>) {
            return exact(m);
        } else {
            return (*this)(m);
        }
    }

    /// theta_0..theta_N with theta_0 = 0 as padding.
    template <class T>
    std::vector<T> values(int N) const {
        std::vector<T> out(static_cast<std::size_t>(N) + 1, T(0));
        for (int m = 1; m <= N; ++m) out[static_cast<std::size_t>(m)] = at<T>(m);
        return out;
    }

private:
    std::string name_;
    DoubleRule eval_;
    ExactRule exact_;
    std::optional<SingularityClass> singularity_;
};

} // namespace cyclemeter
