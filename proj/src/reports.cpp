#include "cyclemeter/reports.hpp"

#include "cyclemeter/distances.hpp"
#include "cyclemeter/error.hpp"
#include "cyclemeter/measure.hpp"
#include "cyclemeter/singularity.hpp"
#include "cyclemeter/special.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace cyclemeter {

namespace {

constexpr double kPoissonTail = 1e-15;

const SingularityClass& positive_theta_class(const WeightFamily& family, const char* what) {
    const SingularityClass& cls = family.require_class();
    if (!(cls.theta > 0)) {
        throw UnsupportedClassError(std::string(what) + " needs a class with theta > 0 (family " +
                                    family.weights.name() + ")");
    }
    return cls;
}

void check_grid(std::span<const int> n_values, int min_n) {
    if (n_values.empty()) throw UsageError("empty n grid");
    for (int n : n_values) {
        if (n < min_n) throw UsageError("n grid entries must be >= " + std::to_string(min_n));
    }
}

ComparisonReport start(const WeightFamily& family, std::string kind, std::string metric,
                       std::span<const int> n_values, std::string reference_rate) {
    ComparisonReport r;
    r.kind = std::move(kind);
    r.family = family.weights.name();
    r.metric = std::move(metric);
    r.n_values.assign(n_values.begin(), n_values.end());
    r.reference_rate = std::move(reference_rate);
    return r;
}

void finish(ComparisonReport& r) { r.fitted_slope = loglog_slope(r.n_values, r.values); }

double log_n(int n) { return std::log(static_cast<double>(n)); }

} // namespace

double loglog_slope(std::span<const int> n_values, std::span<const double> values) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int count = 0;
    for (std::size_t i = 0; i < n_values.size() && i < values.size(); ++i) {
        if (!(values[i] > 0) || n_values[i] <= 0) continue;
        double x = std::log(static_cast<double>(n_values[i]));
        double y = std::log(values[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++count;
    }
    double denom = count * sxx - sx * sx;
    if (count < 2 || denom <= 0) return std::numeric_limits<double>::quiet_NaN();
    return (count * sxy - sx * sy) / denom;
}

bool nonincreasing_trend(std::span<const double> values, int allowed, double slack) {
    int violations = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] <= values[i - 1]) continue;
        if (values[i] > values[i - 1] * (1 + slack)) return false;
        if (++violations > allowed) return false;
    }
    return true;
}

std::vector<ComparisonReport> poisson_vector_report(const WeightFamily& family, int b,
                                                    std::span<const int> n_values) {
    const SingularityClass& cls = family.require_class();
    if (b < 1) throw UsageError("poisson_vector_report needs b >= 1");
    check_grid(n_values, 1);
    const WeightSequence& theta = family.weights;

    std::vector<double> mu(static_cast<std::size_t>(b) + 1, 0.0);
    std::vector<int> box(static_cast<std::size_t>(b) + 1, 0);
    for (int m = 1; m <= b; ++m) {
        mu[m] = theta(m) * std::pow(cls.r, m) / m;
        box[m] = poisson_quantile(mu[m], kPoissonTail);
    }
    const double truncation = b * kPoissonTail;

    std::string rate = cls.kind == ClassKind::F ? "1/n (pointwise bound)"
                                                : "log(n)/n^gamma (pointwise bound)";
    ComparisonReport tv = start(family, "poisson-vector", "tv", n_values, rate);
    ComparisonReport sup = start(family, "poisson-vector", "sup-pointwise", n_values, rate);

    for (int n : n_values) {
        TuplePmf<double> p = joint_cycle_pmf<double>(theta, n, b);
        std::vector<std::vector<double>> pois(static_cast<std::size_t>(b) + 1);
        for (int m = 1; m <= b; ++m) {
            int top = std::max(n / m, box[m]);
            for (int c = 0; c <= top; ++c) pois[m].push_back(poisson_pmf(mu[m], c));
        }
        auto q_of = [&](const std::vector<int>& c) {
            double q = 1;
            for (int m = 1; m <= b; ++m) q *= pois[m][c[m - 1]];
            return q;
        };
        double abs_sum = 0, sup_diff = 0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            double d = std::abs(p.mass[i] - q_of(p.support[i]));
            abs_sum += d;
            sup_diff = std::max(sup_diff, d);
        }
        // Box tuples beyond sum m c_m <= n carry Poisson mass only.
        std::vector<int> c(static_cast<std::size_t>(b), 0);
        while (true) {
            int weight = 0;
            for (int m = 1; m <= b; ++m) weight += m * c[m - 1];
            if (weight > n) {
                double q = q_of(c);
                abs_sum += q;
                sup_diff = std::max(sup_diff, q);
            }
            int pos = 0;
            while (pos < b && c[pos] == box[pos + 1]) c[pos++] = 0;
            if (pos == b) break;
            ++c[pos];
        }
        tv.values.push_back(abs_sum / 2 + truncation);
        sup.values.push_back(sup_diff + truncation);
        double ref = cls.kind == ClassKind::F ? 1.0 / n : log_n(std::max(n, 2)) / std::pow(n, cls.gamma);
        tv.reference_values.push_back(ref);
        sup.reference_values.push_back(ref);
    }
    finish(tv);
    finish(sup);
    return {tv, sup};
}

ComparisonReport mod_poisson_report(const WeightFamily& family, std::span<const int> n_values,
                                    std::span<const double> s_grid) {
    const SingularityClass& cls = positive_theta_class(family, "mod_poisson_report");
    check_grid(n_values, 1);
    if (s_grid.empty()) throw UsageError("empty s grid");
    ComparisonReport r = start(family, "mod-poisson", "sup-char-fn", n_values, "1/n");
    std::vector<IntPmf<double>> pmfs = total_cycles_pmfs<double>(family.weights, n_values);
    for (std::size_t i = 0; i < n_values.size(); ++i) {
        const int n = n_values[i];
        const double lambda = cls.K + cls.theta * log_n(n);
        double sup = 0;
        for (double s : s_grid) {
            Complex cf = 0;
            for (std::size_t j = 0; j < pmfs[i].size(); ++j) {
                cf += pmfs[i].mass[j] * std::polar(1.0, s * pmfs[i].support[j]);
            }
            Complex scaled = std::exp(lambda * (1.0 - std::polar(1.0, s))) * cf;
            sup = std::max(sup, std::abs(scaled - mod_poisson_limit(cls.theta, s)));
        }
        r.values.push_back(sup);
        r.reference_values.push_back(1.0 / n);
    }
    finish(r);
    return r;
}

namespace {

double kolmogorov_to_normal(const IntPmf<double>& p, double center, double scale) {
    double below = 0, sup = 0;
    for (std::size_t j = 0; j < p.size(); ++j) {
        double phi = standard_normal_cdf((p.support[j] - center) / scale);
        sup = std::max(sup, std::abs(below - phi));
        below += p.mass[j];
        sup = std::max(sup, std::abs(below - phi));
    }
    return sup;
}

} // namespace

std::vector<ComparisonReport> clt_report(const WeightFamily& family, std::span<const int> n_values) {
    const SingularityClass& cls = positive_theta_class(family, "clt_report");
    check_grid(n_values, 2);
    ComparisonReport proof = start(family, "clt", "d_K", n_values, "decreasing");
    ComparisonReport stated = start(family, "clt", "d_K[theta*sqrt(log n)]", n_values, "decreasing");
    std::vector<IntPmf<double>> pmfs = total_cycles_pmfs<double>(family.weights, n_values);
    for (std::size_t i = 0; i < n_values.size(); ++i) {
        const double L = log_n(n_values[i]);
        const double center = cls.theta * L;
        proof.values.push_back(kolmogorov_to_normal(pmfs[i], center, std::sqrt(cls.theta * L)));
        stated.values.push_back(kolmogorov_to_normal(pmfs[i], center, cls.theta * std::sqrt(L)));
        proof.reference_values.push_back(1 / std::sqrt(L));
        stated.reference_values.push_back(1 / std::sqrt(L));
    }
    finish(proof);
    finish(stated);
    return {proof, stated};
}

std::vector<ComparisonReport> poisson_k_approx_report(const WeightFamily& family,
                                                      std::span<const int> n_values) {
    const SingularityClass& cls = positive_theta_class(family, "poisson_k_approx_report");
    check_grid(n_values, 1);
    ComparisonReport loc = start(family, "poisson-k", "d_loc", n_values, "1/log(n)");
    ComparisonReport kol = start(family, "poisson-k", "d_K", n_values, "1/sqrt(log(n))");
    std::vector<IntPmf<double>> pmfs = total_cycles_pmfs<double>(family.weights, n_values);
    for (std::size_t i = 0; i < n_values.size(); ++i) {
        const double L = log_n(n_values[i]);
        const double lambda = cls.K + cls.theta * L;
        if (lambda < 0) throw UsageError("Poisson mean K + theta log n is negative");
        IntPmf<double> q = poisson_distribution(lambda, kPoissonTail);
        loc.values.push_back(d_loc(pmfs[i], q) + q.tol);
        kol.values.push_back(d_K(pmfs[i], q) + q.tol);
        loc.reference_values.push_back(1 / L);
        kol.reference_values.push_back(1 / std::sqrt(L));
    }
    finish(loc);
    finish(kol);
    return {loc, kol};
}

LargeDeviationReport large_deviation_report(const WeightFamily& family, int n, std::optional<int> k,
                                            double sigmas) {
    const SingularityClass& cls = positive_theta_class(family, "large_deviation_report");
    if (n < 1) throw UsageError("large_deviation_report needs n >= 1");
    IntPmf<double> p = total_cycles_pmf<double>(family.weights, n);
    LargeDeviationReport r;
    r.family = family.weights.name();
    r.n = n;
    for (std::size_t j = 0; j < p.size(); ++j) r.mean += p.support[j] * p.mass[j];
    double var = 0;
    for (std::size_t j = 0; j < p.size(); ++j) {
        double d = p.support[j] - r.mean;
        var += d * d * p.mass[j];
    }
    r.sd = std::sqrt(var);
    r.k = k ? *k : static_cast<int>(std::lround(r.mean + sigmas * r.sd));
    if (r.k < 1 || r.k > n) throw UsageError("k must lie in 1..n");
    r.exact = p.at(r.k);
    LargeDeviationEstimate e = large_deviation_estimate(cls.theta, cls.K, n, r.k);
    r.estimate = e.estimate;
    r.direct = e.direct;
    r.relative_error = std::abs(e.estimate - r.exact) / r.exact;
    r.relative_error_direct = std::abs(e.direct - r.exact) / r.exact;
    r.t_n = e.t_n;
    r.x = e.x;
    r.rate = e.rate;
    r.tilt = e.tilt;
    return r;
}

std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string to_json(const std::vector<ComparisonReport>& reports) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : reports) {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t i = 0; i < r.n_values.size(); ++i) {
            rows.push_back({{"n", r.n_values[i]},
                            {"value", r.values[i]},
                            {"reference_rate_value", r.reference_values[i]}});
        }
        out.push_back({{"kind", r.kind},
                       {"family", r.family},
                       {"metric", r.metric},
                       {"reference_rate", r.reference_rate},
                       {"fitted_slope", r.fitted_slope},
                       {"rows", rows}});
    }
    return out.dump(2) + "\n";
}

std::string to_csv(const std::vector<ComparisonReport>& reports) {
    std::ostringstream os;
    os << "n,metric,value,reference_rate_value\n";
    for (const auto& r : reports) {
        for (std::size_t i = 0; i < r.n_values.size(); ++i) {
            os << r.n_values[i] << ',' << r.metric << ',' << format_number(r.values[i]) << ','
               << format_number(r.reference_values[i]) << '\n';
        }
    }
    return os.str();
}

std::string to_json(const LargeDeviationReport& r) {
    nlohmann::json out = {{"kind", "large-dev"},
                          {"family", r.family},
                          {"n", r.n},
                          {"k", r.k},
                          {"mean", r.mean},
                          {"sd", r.sd},
                          {"exact", r.exact},
                          {"estimate", r.estimate},
                          {"direct", r.direct},
                          {"relative_error", r.relative_error},
                          {"relative_error_direct", r.relative_error_direct},
                          {"t_n", r.t_n},
                          {"x", r.x},
                          {"rate", r.rate},
                          {"tilt", r.tilt}};
    return out.dump(2) + "\n";
}

std::string to_csv(const LargeDeviationReport& r) {
    std::ostringstream os;
    os << "n,k,mean,sd,exact,estimate,direct,relative_error,relative_error_direct,t_n,x,rate,tilt\n";
    os << r.n << ',' << r.k;
    for (double v : {r.mean, r.sd, r.exact, r.estimate, r.direct, r.relative_error,
                     r.relative_error_direct, r.t_n, r.x, r.rate, r.tilt}) {
        os << ',' << format_number(v);
    }
    os << '\n';
    return os.str();
}

} // namespace cyclemeter
