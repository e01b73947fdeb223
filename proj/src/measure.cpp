#include "cyclemeter/measure.hpp"

#include "cyclemeter/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cyclemeter {

namespace {

std::size_t idx(int n) { return static_cast<std::size_t>(n); }

template <class T>
T scale_for(const WeightSequence& theta, int n) {
    if constexpr (std::is_same_v<T, Rational>) {
        return T(1);
    } else {
        return probability_scale(theta, n);
    }
}

template <class T>
void require_positive(const T& h, int n) {
    if (!(h > 0)) throw DegenerateMeasureError("normalization h_" + std::to_string(n) + " vanishes");
}

// Tuples (c_1..c_b) with sum m c_m <= n, ascending lexicographic.
void collect_tuples(int b, int m, int budget, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (m > b) {
        out.push_back(cur);
        return;
    }
    for (int c = 0; c * m <= budget; ++c) {
        cur[idx(m - 1)] = c;
        collect_tuples(b, m + 1, budget - c * m, cur, out);
    }
    cur[idx(m - 1)] = 0;
}

} // namespace

double probability_scale(const WeightSequence& theta, int n) {
    if (const auto& cls = theta.singularity(); cls && std::isfinite(cls->r) && cls->r > 0) return cls->r;
    if (n >= 1) {
        double w = theta(n);
        if (w > 0 && std::isfinite(w)) {
            double rho = std::pow(w, -1.0 / n);
            if (std::isfinite(rho) && rho > 0) return rho;
        }
    }
    return 1.0;
}

template <class T>
TruncatedSeries<T> cycle_log_series(const WeightSequence& theta, int N, const T& scale) {
    if (N < 0) throw UsageError("truncation order must be nonnegative");
    std::vector<T> g(idx(N) + 1, T(0));
    T power(1);
    for (int k = 1; k <= N; ++k) {
        power *= scale;
        T v = theta.at<T>(k);
        v *= power;
        v /= T(k);
        g[idx(k)] = v;
    }
    return TruncatedSeries<T>(N, std::move(g));
}

template <class T>
std::vector<T> normalization_constants(const WeightSequence& theta, int N) {
    auto h = ts_exp(cycle_log_series<T>(theta, N));
    return {h.coefficients().begin(), h.coefficients().end()};
}

template <class T>
TuplePmf<T> joint_cycle_pmf(const WeightSequence& theta, int n, int b) {
    if (b < 1 || b > n) throw UsageError("joint_cycle_pmf needs 1 <= b <= n");
    const T rho = scale_for<T>(theta, n);
    auto g = cycle_log_series<T>(theta, n, rho);
    auto h = ts_exp(g);
    require_positive(h[n], n);

    std::vector<T> tail_g(g.coefficients().begin(), g.coefficients().end());
    for (int m = 1; m <= b; ++m) tail_g[idx(m)] = T(0);
    auto tail = ts_exp(TruncatedSeries<T>(n, std::move(tail_g)));

    std::vector<std::vector<int>> tuples;
    std::vector<int> cur(idx(b), 0);
    collect_tuples(b, 1, n, cur, tuples);

    TuplePmf<T> out;
    out.support = std::move(tuples);
    out.mass.reserve(out.support.size());
    for (const auto& c : out.support) {
        T mass(1);
        int used = 0;
        for (int m = 1; m <= b; ++m) {
            for (int i = 1; i <= c[idx(m - 1)]; ++i) {
                mass *= g[m];
                mass /= T(i);
            }
            used += m * c[idx(m - 1)];
        }
        mass *= tail[n - used];
        mass /= h[n];
        out.mass.push_back(mass);
    }
    out.tol = std::is_same_v<T, Rational> ? 0.0 : 1e-10;
    return out;
}

template <class T>
std::vector<IntPmf<T>> total_cycles_pmfs(const WeightSequence& theta, std::span<const int> ns) {
    if (ns.empty()) return {};
    int top = *std::max_element(ns.begin(), ns.end());
    if (*std::min_element(ns.begin(), ns.end()) < 1) throw UsageError("total_cycles_pmf needs n >= 1");
    const T rho = scale_for<T>(theta, top);
    auto table = bv_exp_wg(cycle_log_series<T>(theta, top, rho));

    std::vector<IntPmf<T>> out;
    out.reserve(ns.size());
    for (int n : ns) {
        auto row = table.row(n);
        T h(0);
        for (const auto& v : row) h += v;
        require_positive(h, n);
        IntPmf<T> p;
        for (int k = 1; k <= n; ++k) {
            p.support.push_back(k);
            T m = row[idx(k)];
            m /= h;
            p.mass.push_back(m);
        }
        p.tol = std::is_same_v<T, Rational> ? 0.0 : 1e-10;
        out.push_back(std::move(p));
    }
    return out;
}

template <class T>
IntPmf<T> total_cycles_pmf(const WeightSequence& theta, int n) {
    int ns[] = {n};
    return std::move(total_cycles_pmfs<T>(theta, ns).front());
}

template <class T>
std::vector<T> expected_cycle_counts(const WeightSequence& theta, int n) {
    if (n < 1) throw UsageError("expected_cycle_counts needs n >= 1");
    const T rho = scale_for<T>(theta, n);
    auto g = cycle_log_series<T>(theta, n, rho);
    auto h = ts_exp(g);
    require_positive(h[n], n);
    std::vector<T> e(idx(n) + 1, T(0));
    for (int m = 1; m <= n; ++m) {
        T v = g[m];
        v *= h[n - m];
        v /= h[n];
        e[idx(m)] = v;
    }
    return e;
}

#define CYCLEMETER_INSTANTIATE(T)                                                                   \
    template TruncatedSeries<T> cycle_log_series<T>(const WeightSequence&, int, const T&);          \
    template std::vector<T> normalization_constants<T>(const WeightSequence&, int);                 \
    template TuplePmf<T> joint_cycle_pmf<T>(const WeightSequence&, int, int);                       \
    template IntPmf<T> total_cycles_pmf<T>(const WeightSequence&, int);                             \
    template std::vector<IntPmf<T>> total_cycles_pmfs<T>(const WeightSequence&, std::span<const int>); \
    template std::vector<T> expected_cycle_counts<T>(const WeightSequence&, int);

CYCLEMETER_INSTANTIATE(double)
CYCLEMETER_INSTANTIATE(Rational)

#undef CYCLEMETER_INSTANTIATE

} // namespace cyclemeter
