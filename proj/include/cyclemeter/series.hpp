#pragma once

#include "cyclemeter/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace cyclemeter {

/// Power series in t truncated after t^N. Coefficient n is the coefficient
/// of t^n; the storage always holds exactly N+1 coefficients.
template <class T>
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order);
    TruncatedSeries(int order, std::vector<T> coeffs);

    /// Coefficient sequence padded with zeros (or cut) to order N.
    static TruncatedSeries from_coefficients(int order, std::span<const T> coeffs);
    static TruncatedSeries one(int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const T& operator[](int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
    std::span<const T> coefficients() const { return coeffs_; }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<T> coeffs_;
};

/// Series in t whose t^n coefficient is a polynomial in u of degree <= n.
/// Stored as a dense lower-triangular table.
template <class T>
class BivariateSeries {
public:
    BivariateSeries(int order, std::vector<std::vector<T>> rows);

    int order() const { return static_cast<int>(rows_.size()) - 1; }
    /// Coefficient of t^n u^k (zero when k > n).
    T at(int n, int k) const;
    std::span<const T> row(int n) const { return rows_[static_cast<std::size_t>(n)]; }

    /// Substitutes a value for u.
    TruncatedSeries<T> evaluate(const T& u) const;

private:
    std::vector<std::vector<T>> rows_;
};

template <class T>
TruncatedSeries<T> ts_mul(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b);

template <class T>
TruncatedSeries<T> ts_add(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b);

/// exp(g) for g with zero constant term, by n H_n = sum_k k g_k H_{n-k}.
template <class T>
TruncatedSeries<T> ts_exp(const TruncatedSeries<T>& g);

/// Inverse of ts_exp; requires a unit constant term.
template <class T>
TruncatedSeries<T> ts_log(const TruncatedSeries<T>& h);

/// exp(u g(t)) as a bivariate series; coefficient of t^n u^k collects the
/// cycle-index terms of partitions of n with exactly k parts.
template <class T>
BivariateSeries<T> bv_exp_wg(const TruncatedSeries<T>& g);

/// Substitutes x -> scale * t^step into a series in x, truncated at `order` in t.
template <class T>
TruncatedSeries<T> ts_substitute_monomial(std::span<const T> series_in_x, int step,
                                          const T& scale, int order);

} // namespace cyclemeter
