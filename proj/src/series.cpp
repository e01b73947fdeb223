#include "cyclemeter/series.hpp"

#include "cyclemeter/error.hpp"
#include "cyclemeter/kernels.hpp"

#include <string>

namespace cyclemeter {

namespace {

void require_order(int order) {
    if (order < 0) throw UsageError("truncation order must be nonnegative");
}

template <class T>
void require_same_order(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
    if (a.order() != b.order()) {
        throw UsageError("mismatched truncation orders " + std::to_string(a.order()) + " and " +
                         std::to_string(b.order()));
    }
}

std::size_t idx(int n) { return static_cast<std::size_t>(n); }

} // namespace

template <class T>
TruncatedSeries<T>::TruncatedSeries(int order) {
    require_order(order);
    coeffs_.assign(idx(order) + 1, T(0));
}

template <class T>
TruncatedSeries<T>::TruncatedSeries(int order, std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
    require_order(order);
    if (coeffs_.size() != idx(order) + 1) {
        throw UsageError("series of order " + std::to_string(order) + " needs " +
                         std::to_string(order + 1) + " coefficients");
    }
}

template <class T>
TruncatedSeries<T> TruncatedSeries<T>::from_coefficients(int order, std::span<const T> coeffs) {
    TruncatedSeries s(order);
    for (std::size_t n = 0; n < coeffs.size() && n <= idx(order); ++n) s.coeffs_[n] = coeffs[n];
    return s;
}

template <class T>
TruncatedSeries<T> TruncatedSeries<T>::one(int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = T(1);
    return s;
}

template <class T>
BivariateSeries<T>::BivariateSeries(int order, std::vector<std::vector<T>> rows) : rows_(std::move(rows)) {
    require_order(order);
    if (rows_.size() != idx(order) + 1) throw UsageError("bivariate series needs order+1 rows");
    for (std::size_t n = 0; n < rows_.size(); ++n) {
        if (rows_[n].size() > n + 1) throw UsageError("row " + std::to_string(n) + " exceeds degree n in u");
        rows_[n].resize(n + 1, T(0));
    }
}

template <class T>
T BivariateSeries<T>::at(int n, int k) const {
    if (n < 0 || n > order()) throw UsageError("t-index out of range");
    if (k < 0 || k > n) return T(0);
    return rows_[idx(n)][idx(k)];
}

template <class T>
TruncatedSeries<T> BivariateSeries<T>::evaluate(const T& u) const {
    std::vector<T> out(rows_.size(), T(0));
    for (std::size_t n = 0; n < rows_.size(); ++n) {
        // Horner in u
        T acc(0);
        for (std::size_t k = rows_[n].size(); k-- > 0;) {
            acc *= u;
            acc += rows_[n][k];
        }
        out[n] = acc;
    }
    return TruncatedSeries<T>(order(), std::move(out));
}

template <class T>
TruncatedSeries<T> ts_mul(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
    require_same_order(a, b);
    const int order = a.order();
    std::vector<T> out(idx(order) + 1, T(0));
    for (int i = 0; i <= order; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= order; ++j) out[idx(i + j)] += a[i] * b[j];
    }
    return TruncatedSeries<T>(order, std::move(out));
}

template <class T>
TruncatedSeries<T> ts_add(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
    require_same_order(a, b);
    std::vector<T> out(idx(a.order()) + 1);
    for (int n = 0; n <= a.order(); ++n) out[idx(n)] = a[n] + b[n];
    return TruncatedSeries<T>(a.order(), std::move(out));
}

template <class T>
TruncatedSeries<T> ts_exp(const TruncatedSeries<T>& g) {
    if (g[0] != 0) throw UsageError("ts_exp needs a zero constant term");
    const int order = g.order();
    std::vector<T> kg(idx(order) + 1, T(0));
    for (int k = 1; k <= order; ++k) kg[idx(k)] = T(k) * g[k];
    std::vector<T> h(idx(order) + 1, T(0));
    h[0] = T(1);
    for (int n = 1; n <= order; ++n) {
        T acc(0);
        for (int k = 1; k <= n; ++k) acc += kg[idx(k)] * h[idx(n - k)];
        acc /= T(n);
        h[idx(n)] = acc;
    }
    return TruncatedSeries<T>(order, std::move(h));
}

template <class T>
TruncatedSeries<T> ts_log(const TruncatedSeries<T>& h) {
    if (h[0] != 1) throw UsageError("ts_log needs constant term 1");
    const int order = h.order();
    // n L_n = n h_n - sum_{k=1}^{n-1} k L_k h_{n-k}
    std::vector<T> kl(idx(order) + 1, T(0));
    std::vector<T> l(idx(order) + 1, T(0));
    for (int n = 1; n <= order; ++n) {
        T acc = T(n) * h[n];
        for (int k = 1; k < n; ++k) acc -= kl[idx(k)] * h[n - k];
        kl[idx(n)] = acc;
        acc /= T(n);
        l[idx(n)] = acc;
    }
    return TruncatedSeries<T>(order, std::move(l));
}

template <class T>
BivariateSeries<T> bv_exp_wg(const TruncatedSeries<T>& g) {
    if (g[0] != 0) throw UsageError("bv_exp_wg needs a zero constant term");
    const int order = g.order();
    std::vector<T> kg(idx(order) + 1, T(0));
    for (int k = 1; k <= order; ++k) kg[idx(k)] = T(k) * g[k];
    return BivariateSeries<T>(order, kernels::omp::exp_wg_table<T>(kg, order));
}

template <class T>
TruncatedSeries<T> ts_substitute_monomial(std::span<const T> series_in_x, int step, const T& scale,
                                          int order) {
    if (step < 1) throw UsageError("substitution step must be positive");
    std::vector<T> coeffs(idx(order) + 1, T(0));
    T power(1);
    for (std::size_t k = 0; k < series_in_x.size(); ++k) {
        long n = static_cast<long>(k) * step;
        if (n > order) break;
        coeffs[static_cast<std::size_t>(n)] = series_in_x[k] * power;
        power *= scale;
    }
    return TruncatedSeries<T>(order, std::move(coeffs));
}

#define CYCLEMETER_INSTANTIATE(T)                                                                   \
    template class TruncatedSeries<T>;                                                              \
    template class BivariateSeries<T>;                                                              \
    template TruncatedSeries<T> ts_mul(const TruncatedSeries<T>&, const TruncatedSeries<T>&);       \
    template TruncatedSeries<T> ts_add(const TruncatedSeries<T>&, const TruncatedSeries<T>&);       \
    template TruncatedSeries<T> ts_exp(const TruncatedSeries<T>&);                                  \
    template TruncatedSeries<T> ts_log(const TruncatedSeries<T>&);                                  \
    template BivariateSeries<T> bv_exp_wg(const TruncatedSeries<T>&);                               \
    template TruncatedSeries<T> ts_substitute_monomial(std::span<const T>, int, const T&, int);

CYCLEMETER_INSTANTIATE(double)
CYCLEMETER_INSTANTIATE(Rational)

#undef CYCLEMETER_INSTANTIATE

} // namespace cyclemeter
