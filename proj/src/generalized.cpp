#include "cyclemeter/generalized.hpp"

#include "cyclemeter/error.hpp"
#include "cyclemeter/special.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>

namespace cyclemeter {

namespace {

std::size_t idx(int n) { return static_cast<std::size_t>(n); }

void require_slot(int m, int k) {
    if (m < 1) throw UsageError("generalized weights are indexed from m = 1");
    if (k < 0) throw UsageError("generalized weights need k >= 0");
}

template <class T>
T factorial(int k) {
    T f(1);
    for (int i = 2; i <= k; ++i) f *= T(i);
    return f;
}

// F_m(c) / (c! m^c): coefficient of t^{mc} in EG(F_m, t^m/m).
template <class T>
std::vector<T> cycle_factors(const GeneralizedWeights& F, int m, int n) {
    std::vector<T> f(idx(n / m) + 1, T(0));
    T denom(1);
    for (int c = 0; c <= n / m; ++c) {
        if (c > 0) {
            denom *= T(c);
            denom *= T(m);
        }
        f[idx(c)] = F.at<T>(m, c);
        f[idx(c)] /= denom;
    }
    return f;
}

// acc(t) *= sum_c f_c t^{m c}, in place from the top so lower entries are still old.
template <class T>
void multiply_sparse(std::vector<T>& acc, const std::vector<T>& f, int m) {
    const int N = static_cast<int>(acc.size()) - 1;
    for (int n = N; n >= 0; --n) {
        T sum = acc[idx(n)] * f[0];
        for (int c = 1; c * m <= n; ++c) sum += f[idx(c)] * acc[idx(n - c * m)];
        acc[idx(n)] = sum;
    }
}

template <class T>
std::vector<T> eg_product(const GeneralizedWeights& F, int first_m, int N) {
    std::vector<T> acc(idx(N) + 1, T(0));
    acc[0] = T(1);
    for (int m = first_m; m <= N; ++m) multiply_sparse(acc, cycle_factors<T>(F, m, N), m);
    return acc;
}

template <class T>
void require_positive(const T& h, int n) {
    if (!(h > 0)) throw DegenerateMeasureError("h_" + std::to_string(n) + "(F) is not positive");
}

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

template <class T>
double tol_for() {
    return std::is_same_v<T, Rational> ? 0.0 : 1e-10;
}

} // namespace

GeneralizedWeights::GeneralizedWeights(std::string name, DoubleRule eval, ExactRule exact)
    : name_(std::move(name)), eval_(std::move(eval)), exact_(std::move(exact)) {
    if (!eval_) throw UsageError("generalized weights need an evaluation rule");
}

GeneralizedWeights GeneralizedWeights::from_weight_sequence(const WeightSequence& theta) {
    return GeneralizedWeights(
        theta.name(),
        [theta](int m, int k) { return std::pow(theta(m), k); },
        [theta](int m, int k) {
            Rational base = theta.exact(m);
            Rational out(1);
            for (int i = 0; i < k; ++i) out *= base;
            return out;
        });
}

double GeneralizedWeights::operator()(int m, int k) const {
    require_slot(m, k);
    if (k == 0) {
        if (eval_(m, 0) != 1) throw UsageError(name_ + ": F_m(0) must be 1");
        return 1;
    }
    double v = eval_(m, k);
    if (!(v > 0) || !std::isfinite(v)) {
        throw UsageError(name_ + ": F_" + std::to_string(m) + "(" + std::to_string(k) + ") must be positive");
    }
    return v;
}

Rational GeneralizedWeights::exact(int m, int k) const {
    require_slot(m, k);
    if (!exact_) {
        double v = (*this)(m, k);
        return exact_from_double(v);
    }
    Rational v = exact_(m, k);
    if (k == 0 && v != 1) throw UsageError(name_ + ": F_m(0) must be 1");
    if (v <= 0) {
        throw UsageError(name_ + ": F_" + std::to_string(m) + "(" + std::to_string(k) + ") must be positive");
    }
    return v;
}

template <class T>
TruncatedSeries<T> eg_series(const GeneralizedWeights& F, int m, int x_trunc) {
    if (x_trunc < 0) throw UsageError("eg_series needs x_trunc >= 0");
    std::vector<T> coeffs(idx(x_trunc) + 1, T(0));
    T fact(1);
    for (int k = 0; k <= x_trunc; ++k) {
        if (k > 0) fact *= T(k);
        coeffs[idx(k)] = F.at<T>(m, k);
        coeffs[idx(k)] /= fact;
    }
    return TruncatedSeries<T>(x_trunc, std::move(coeffs));
}

template <class T>
std::vector<T> generalized_normalization(const GeneralizedWeights& F, int N) {
    if (N < 0) throw UsageError("generalized_normalization needs N >= 0");
    return eg_product<T>(F, 1, N);
}

template <class T>
TuplePmf<T> generalized_joint_cycle_pmf(const GeneralizedWeights& F, int n, int b) {
    if (b < 1 || b > n) throw UsageError("generalized_joint_cycle_pmf needs 1 <= b <= n");
    std::vector<T> h = eg_product<T>(F, 1, n);
    require_positive(h[idx(n)], n);
    std::vector<T> tail = eg_product<T>(F, b + 1, n);
    std::vector<std::vector<T>> factors;
    for (int m = 1; m <= b; ++m) factors.push_back(cycle_factors<T>(F, m, n));

    std::vector<int> cur(idx(b), 0);
    TuplePmf<T> out;
    collect_tuples(b, 1, n, cur, out.support);
    out.mass.reserve(out.support.size());
    for (const auto& c : out.support) {
        T mass(1);
        int used = 0;
        for (int m = 1; m <= b; ++m) {
            mass *= factors[idx(m - 1)][idx(c[idx(m - 1)])];
            used += m * c[idx(m - 1)];
        }
        mass *= tail[idx(n - used)];
        mass /= h[idx(n)];
        out.mass.push_back(mass);
    }
    out.tol = tol_for<T>();
    return out;
}

template <class T>
IntPmf<T> generalized_total_cycles_pmf(const GeneralizedWeights& F, int n) {
    if (n < 1) throw UsageError("generalized_total_cycles_pmf needs n >= 1");
    // rows[j][k]: coefficient of t^j u^k.
    std::vector<std::vector<T>> rows(idx(n) + 1);
    for (int j = 0; j <= n; ++j) rows[idx(j)].assign(idx(j) + 1, T(0));
    rows[0][0] = T(1);
    for (int m = 1; m <= n; ++m) {
        std::vector<T> f = cycle_factors<T>(F, m, n);
        for (int j = n; j >= m; --j) {
            for (int k = j; k >= 1; --k) {
                T sum = rows[idx(j)][idx(k)];
                for (int c = 1; c * m <= j && c <= k; ++c) {
                    if (k - c > j - c * m) continue;
                    sum += f[idx(c)] * rows[idx(j - c * m)][idx(k - c)];
                }
                rows[idx(j)][idx(k)] = sum;
            }
        }
    }
    T h(0);
    for (const auto& v : rows[idx(n)]) h += v;
    require_positive(h, n);
    IntPmf<T> out;
    for (int k = 1; k <= n; ++k) {
        out.support.push_back(k);
        T mass = rows[idx(n)][idx(k)];
        mass /= h;
        out.mass.push_back(mass);
    }
    out.tol = tol_for<T>();
    return out;
}

template <class T>
PartitionOracle<T> generalized_partition_oracle(const GeneralizedWeights& F, int n, int limit) {
    if (n < 1) throw UsageError("cycle-type law needs n >= 1");
    CycleCountWeight<T> weight = [&F](int m, int c) {
        T w = F.at<T>(m, c);
        for (int i = 1; i <= c; ++i) {
            w /= T(i);
            w /= T(m);
        }
        return w;
    };
    return brute_force_partition_measure<T>(n, weight, limit);
}

template <class T>
TuplePmf<T> cycle_count_marginal(const Pmf<Partition, T>& law, int n, int b) {
    if (b < 1 || b > n) throw UsageError("cycle_count_marginal needs 1 <= b <= n");
    std::map<std::vector<int>, T> acc;
    std::vector<int> cur(idx(b), 0);
    std::vector<std::vector<int>> tuples;
    collect_tuples(b, 1, n, cur, tuples);
    for (const auto& c : tuples) acc.emplace(c, T(0));
    for (std::size_t i = 0; i < law.size(); ++i) {
        auto counts = law.support[i].cycle_counts();
        std::vector<int> key(idx(b), 0);
        for (int m = 1; m <= b && m < static_cast<int>(counts.size()); ++m) key[idx(m - 1)] = counts[idx(m)];
        acc.at(key) += law.mass[i];
    }
    TuplePmf<T> out;
    for (auto& [k, v] : acc) {
        out.support.push_back(k);
        out.mass.push_back(v);
    }
    out.tol = law.tol;
    return out;
}

template <class T>
IntPmf<T> length_marginal(const Pmf<Partition, T>& law, int n) {
    IntPmf<T> out;
    for (int k = 1; k <= n; ++k) {
        out.support.push_back(k);
        out.mass.push_back(T(0));
    }
    for (std::size_t i = 0; i < law.size(); ++i) out.mass[idx(law.support[i].length() - 1)] += law.mass[i];
    out.tol = law.tol;
    return out;
}

namespace {

void check_poly(const std::vector<Rational>& poly) {
    if (poly.empty() || poly[0] <= 0) throw UsageError("exp-polynomial weights need theta > 0");
    for (std::size_t j = 1; j < poly.size(); ++j) {
        if (poly[j] < 0) throw UsageError("exp-polynomial coefficients b_j must be nonnegative");
    }
}

// Write-once-per-length cache of k! [x^k] exp(P(x)).
template <class T>
class ExpPolyCache {
public:
    explicit ExpPolyCache(std::vector<T> poly) : poly_(std::move(poly)) {}

    T get(int k) {
        std::lock_guard lock(mutex_);
        if (k >= static_cast<int>(values_.size())) fill(std::max(2 * k, 16));
        return values_[idx(k)];
    }

private:
    void fill(int order) {
        std::vector<T> p(idx(order) + 1, T(0));
        for (std::size_t j = 0; j < poly_.size() && static_cast<int>(j) + 1 <= order; ++j) p[j + 1] = poly_[j];
        auto e = ts_exp(TruncatedSeries<T>(order, std::move(p)));
        values_.assign(idx(order) + 1, T(0));
        T fact(1);
        for (int k = 0; k <= order; ++k) {
            if (k > 0) fact *= T(k);
            values_[idx(k)] = e[k] * fact;
        }
    }

    std::vector<T> poly_;
    std::vector<T> values_;
    std::mutex mutex_;
};

std::string poly_name(const std::vector<Rational>& poly) {
    std::string s = "exp-poly(";
    for (std::size_t j = 0; j < poly.size(); ++j) {
        if (j) s += ",";
        s += to_string(poly[j]);
    }
    return s + ")";
}

} // namespace

GeneralizedWeights exp_polynomial_weights(const std::vector<Rational>& poly) {
    check_poly(poly);
    std::vector<double> dpoly;
    for (const auto& q : poly) dpoly.push_back(q.get_d());
    auto exact_cache = std::make_shared<ExpPolyCache<Rational>>(poly);
    auto double_cache = std::make_shared<ExpPolyCache<double>>(dpoly);
    return GeneralizedWeights(
        poly_name(poly), [double_cache](int, int k) { return double_cache->get(k); },
        [exact_cache](int, int k) { return exact_cache->get(k); });
}

template <class T>
TruncatedSeries<T> exp_polynomial_log_series(const std::vector<Rational>& poly, int N) {
    check_poly(poly);
    if (N < 0) throw UsageError("series order must be nonnegative");
    std::vector<T> g(idx(N) + 1, T(0));
    const T theta = from_rational<T>(poly[0]);
    for (int n = 1; n <= N; ++n) g[idx(n)] = theta / T(n);
    // b_j Li_j(t^j) = b_j sum_i t^{ij} / i^j
    for (std::size_t jj = 1; jj < poly.size(); ++jj) {
        const int j = static_cast<int>(jj) + 1;
        const T b = from_rational<T>(poly[jj]);
        for (int i = 1; i * j <= N; ++i) {
            T term = b;
            for (int e = 0; e < j; ++e) term /= T(i);
            g[idx(i * j)] += term;
        }
    }
    return TruncatedSeries<T>(N, std::move(g));
}

SingularityClass exp_polynomial_class(const std::vector<Rational>& poly) {
    check_poly(poly);
    double K = 0;
    for (std::size_t jj = 1; jj < poly.size(); ++jj) K += poly[jj].get_d() * riemann_zeta(static_cast<double>(jj + 1));
    return SingularityClass::F(1, poly[0].get_d(), K);
}

SpatialModel SpatialModel::from_factors(std::vector<Rational> alpha_factors, std::vector<Rational> boltzmann,
                                        std::string truncation_note) {
    if (alpha_factors.empty()) throw UsageError("spatial model needs at least one alpha value");
    if (boltzmann.empty()) throw UsageError("spatial model needs a nonempty lattice");
    SpatialModel model;
    for (const auto& a : alpha_factors) {
        if (a <= 0) throw UsageError("e^{-alpha_m} must be positive");
        model.alpha.push_back(-std::log(a.get_d()));
    }
    for (const auto& q : boltzmann) {
        if (q <= 0) throw UsageError("e^{-eps(k)} must be positive");
        model.eps_values.push_back(-std::log(q.get_d()));
    }
    model.truncation_note = std::move(truncation_note);
    model.exact_alpha_factors = std::move(alpha_factors);
    model.exact_boltzmann = std::move(boltzmann);
    return model;
}

double SpatialModel::alpha_at(int m) const {
    if (alpha.empty()) throw UsageError("spatial model needs at least one alpha value");
    if (m < 1) throw UsageError("alpha is indexed from m = 1");
    return alpha[std::min(idx(m - 1), alpha.size() - 1)];
}

namespace {

void check_model(const SpatialModel& model) {
    if (model.eps_values.empty()) throw UsageError("spatial model needs a nonempty lattice");
    if (model.alpha.empty()) throw UsageError("spatial model needs at least one alpha value");
    if (model.exact_alpha_factors && model.exact_alpha_factors->size() != model.alpha.size()) {
        throw UsageError("exact alpha factors must match the alpha sequence");
    }
    if (model.exact_boltzmann && model.exact_boltzmann->size() != model.eps_values.size()) {
        throw UsageError("exact Boltzmann factors must match the lattice");
    }
}

std::string model_name(const SpatialModel& model) {
    return "spatial(" + std::to_string(model.eps_values.size()) + " points)";
}

} // namespace

WeightSequence spatial_effective_weights(const SpatialModel& model) {
    check_model(model);
    auto shared = std::make_shared<const SpatialModel>(model);
    auto eval = [shared](int m) {
        double sum = 0;
        for (double e : shared->eps_values) sum += std::exp(-e * m);
        return std::exp(-shared->alpha_at(m)) * sum;
    };
    WeightSequence::ExactRule exact;
    if (model.exact_boltzmann && model.exact_alpha_factors) {
        exact = [shared](int m) {
            Rational sum(0);
            for (const auto& q : *shared->exact_boltzmann) {
                Rational p(1);
                for (int i = 0; i < m; ++i) p *= q;
                sum += p;
            }
            const auto& a = *shared->exact_alpha_factors;
            return Rational(a[std::min(idx(m - 1), a.size() - 1)] * sum);
        };
        auto exact_copy = exact;
        return WeightSequence(model_name(model), [exact_copy](int m) { return exact_copy(m).get_d(); }, exact);
    }
    return WeightSequence(model_name(model), eval);
}

GeneralizedWeights spatial_generalized_weights(const SpatialModel& model) {
    return GeneralizedWeights::from_weight_sequence(spatial_effective_weights(model));
}

SingularityClass spatial_class_params(const SpatialModel& model, const SingularityClass& base) {
    check_model(model);
    const double eps_min = *std::min_element(model.eps_values.begin(), model.eps_values.end());
    const double same = 1e-12 * std::max(1.0, std::abs(eps_min));
    int A = 0;
    for (double e : model.eps_values) {
        if (e - eps_min <= same) ++A;
    }
    const double r_tilde = std::exp(eps_min);
    double K = A * base.K;
    for (double e : model.eps_values) {
        if (e - eps_min <= same) continue;
        // g^(alpha)(x) = sum_m e^{-alpha_m} x^m / m, inside its disk of radius r.
        const double x = std::exp(-e) * r_tilde * base.r;
        double sum = 0, power = 1;
        for (int m = 1;; ++m) {
            power *= x;
            double term = std::exp(-model.alpha_at(m)) * power / m;
            sum += term;
            if (term < 1e-18 * std::abs(sum) || m > 100000) break;
        }
        K += sum;
    }
    SingularityClass out = base;
    out.r = r_tilde * base.r;
    out.theta = A * base.theta;
    out.K = K;
    return out;
}

SingularityClass spatial_base_class(const SpatialModel& model) {
    check_model(model);
    const double last = std::exp(-model.alpha.back());
    double K = 0;
    for (std::size_t m = 1; m < model.alpha.size(); ++m) K += (std::exp(-model.alpha[m - 1]) - last) / static_cast<double>(m);
    return SingularityClass::F(1, last, K);
}

WeightFamily spatial_family(const SpatialModel& model) {
    SingularityClass cls = spatial_class_params(model, spatial_base_class(model));
    WeightFamily family{spatial_effective_weights(model).with_singularity(cls), ClassStatus::supported,
                        "fixed-lattice spatial model", model.truncation_note};
    return family;
}

#define CYCLEMETER_INSTANTIATE(T)                                                                      \
    template TruncatedSeries<T> eg_series<T>(const GeneralizedWeights&, int, int);                     \
    template std::vector<T> generalized_normalization<T>(const GeneralizedWeights&, int);              \
    template TuplePmf<T> generalized_joint_cycle_pmf<T>(const GeneralizedWeights&, int, int);          \
    template IntPmf<T> generalized_total_cycles_pmf<T>(const GeneralizedWeights&, int);                \
    template PartitionOracle<T> generalized_partition_oracle<T>(const GeneralizedWeights&, int, int);  \
    template TuplePmf<T> cycle_count_marginal<T>(const Pmf<Partition, T>&, int, int);                  \
    template IntPmf<T> length_marginal<T>(const Pmf<Partition, T>&, int);                              \
    template TruncatedSeries<T> exp_polynomial_log_series<T>(const std::vector<Rational>&, int);

CYCLEMETER_INSTANTIATE(double)
CYCLEMETER_INSTANTIATE(Rational)

#undef CYCLEMETER_INSTANTIATE

} // namespace cyclemeter
