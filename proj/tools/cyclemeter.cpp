// cyclemeter: exact cycle statistics of weighted random permutations.
//
//   cyclemeter hn     --family ewens --theta 2 --n 5
//   cyclemeter dist   --target k --family ewens --theta 1 --n 3 --oracle
//   cyclemeter sample --n 8 --count 100000 --cycle-type-only --seed 7
//   cyclemeter report --kind clt --family ewens --theta 1 --n-grid 100,1000
//
// Exit codes: 0 ok, 2 usage or configuration, 3 mathematical inconsistency
// (oracle mismatch, degenerate measure), 4 failed trend assertion.

#include "cyclemeter/catalog.hpp"
#include "cyclemeter/error.hpp"
#include "cyclemeter/generalized.hpp"
#include "cyclemeter/measure.hpp"
#include "cyclemeter/partitions.hpp"
#include "cyclemeter/reports.hpp"
#include "cyclemeter/sampler.hpp"
#include "cyclemeter/singularity.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace cm = cyclemeter;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitMath = 3;
constexpr int kExitTrend = 4;

struct MathFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TrendFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Every value option as given on the command line, keyed by its long name.
struct Options {
    std::map<std::string, std::string> flags;
    bool oracle = false;
    bool assert_trends = false;
    bool cycle_type_only = false;
    std::string config;
};

const std::vector<std::string> kValueFlags = {
    "family", "theta",  "delta",  "c",      "theta-exp", "alpha",  "eps",    "boltzmann",
    "shift",  "shift-power", "poly", "n",   "n-grid",    "b",      "seed",   "backend",
    "output", "format", "count",  "target", "kind",      "s-grid", "k"};

void add_common(CLI::App* cmd, Options& opts) {
    for (const auto& name : kValueFlags) {
        cmd->add_option_function<std::string>(
            "--" + name, [&opts, name](const std::string& v) { opts.flags[name] = v; }, name);
    }
    cmd->add_option("--config", opts.config, "JSON configuration file");
    cmd->add_flag("--oracle", opts.oracle, "cross-check against the brute-force partition oracle");
    cmd->add_flag("--assert-trends", opts.assert_trends, "exit 4 when a distance sequence increases");
    cmd->add_flag("--cycle-type-only", opts.cycle_type_only, "emit cycle types instead of permutations");
}

std::string json_scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string out;
        for (const auto& e : v) {
            if (!out.empty()) out += ",";
            out += json_scalar_text(e);
        }
        return out;
    }
    return v.dump();
}

// Config keys first, then the named family entry, then command-line flags.
std::map<std::string, std::string> resolve_parameters(const Options& opts) {
    std::map<std::string, std::string> params;
    json families = json::object();
    if (!opts.config.empty()) {
        std::ifstream in(opts.config);
        if (!in) throw cm::UsageError("cannot read config file " + opts.config);
        json doc;
        try {
            doc = json::parse(in);
        } catch (const json::exception& e) {
            throw cm::UsageError("config file " + opts.config + ": " + e.what());
        }
        if (!doc.is_object()) throw cm::UsageError("config file must hold a JSON object");
        for (const auto& [key, value] : doc.items()) {
            if (key == "families") {
                families = value;
            } else {
                params[key] = json_scalar_text(value);
            }
        }
    }
    std::string family = params.count("family") ? params["family"] : "ewens";
    if (auto it = opts.flags.find("family"); it != opts.flags.end()) family = it->second;
    if (families.contains(family)) {
        const json& entry = families[family];
        if (!entry.is_object() || !entry.contains("family")) {
            throw cm::UsageError("config family '" + family + "' needs a \"family\" key");
        }
        for (const auto& [key, value] : entry.items()) params[key] = json_scalar_text(value);
    } else {
        params["family"] = family;
    }
    for (const auto& [key, value] : opts.flags) {
        if (key != "family") params[key] = value;
    }
    return params;
}

std::string param(const std::map<std::string, std::string>& p, const std::string& key, const std::string& fallback) {
    auto it = p.find(key);
    return it == p.end() ? fallback : it->second;
}

int int_param(const std::map<std::string, std::string>& p, const std::string& key, int fallback) {
    auto it = p.find(key);
    if (it == p.end()) return fallback;
    try {
        std::size_t used = 0;
        int v = std::stoi(it->second, &used);
        if (used != it->second.size()) throw std::invalid_argument(key);
        return v;
    } catch (const std::exception&) {
        throw cm::UsageError("--" + key + " expects an integer, got '" + it->second + "'");
    }
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::vector<int> int_list(const std::string& text, const std::string& key) {
    std::vector<int> out;
    for (const auto& s : split_list(text)) {
        std::map<std::string, std::string> one{{key, s}};
        out.push_back(int_param(one, key, 0));
    }
    if (out.empty()) throw cm::UsageError("--" + key + " is empty");
    return out;
}

std::vector<double> double_list(const std::string& text, const std::string& key) {
    std::vector<double> out;
    for (const auto& s : split_list(text)) {
        try {
            out.push_back(std::stod(s));
        } catch (const std::exception&) {
            throw cm::UsageError("--" + key + " expects numbers, got '" + s + "'");
        }
    }
    if (out.empty()) throw cm::UsageError("--" + key + " is empty");
    return out;
}

std::vector<cm::Rational> rational_list(const std::string& text) {
    std::vector<cm::Rational> out;
    for (const auto& s : split_list(text)) out.push_back(cm::parse_rational(s));
    return out;
}

// A resolved family: weighted (P_Theta) or generalized only (P_F).
struct Family {
    std::string name;
    std::optional<cm::WeightFamily> weighted;
    std::optional<cm::GeneralizedWeights> generalized;
    std::optional<cm::SingularityClass> generalized_class;
};

cm::SpatialModel spatial_model(const std::map<std::string, std::string>& p) {
    std::string note = param(p, "truncation-note", "lattice supplied explicitly");
    if (p.count("boltzmann")) {
        std::vector<cm::Rational> alpha_factors;
        for (double a : double_list(param(p, "alpha", "0"), "alpha")) {
            alpha_factors.push_back(a == 0 ? cm::Rational(1) : cm::exact_from_double(std::exp(-a)));
        }
        return cm::SpatialModel::from_factors(alpha_factors, rational_list(p.at("boltzmann")), note);
    }
    if (!p.count("eps")) throw cm::UsageError("spatial family needs --eps or --boltzmann");
    cm::SpatialModel model;
    model.alpha = double_list(param(p, "alpha", "0"), "alpha");
    model.eps_values = double_list(p.at("eps"), "eps");
    model.truncation_note = note;
    return model;
}

Family resolve_family(const std::map<std::string, std::string>& p) {
    Family f;
    f.name = param(p, "family", "ewens");
    if (f.name == "spatial") {
        f.weighted = cm::spatial_family(spatial_model(p));
    } else if (f.name == "exp-poly") {
        auto poly = rational_list(param(p, "poly", param(p, "theta", "1")));
        f.generalized = cm::exp_polynomial_weights(poly);
        f.generalized_class = cm::exp_polynomial_class(poly);
    } else {
        cm::FamilyParameters fp(p.begin(), p.end());
        f.weighted = cm::family_by_name(f.name, fp);
    }
    return f;
}

bool exact_backend(const std::map<std::string, std::string>& p, const std::string& fallback) {
    std::string b = param(p, "backend", fallback);
    if (b == "exact") return true;
    if (b == "double") return false;
    throw cm::UsageError("--backend must be exact or double");
}

bool json_format(const std::map<std::string, std::string>& p) {
    std::string f = param(p, "format", "json");
    if (f == "json") return true;
    if (f == "csv") return false;
    throw cm::UsageError("--format must be json or csv");
}

void emit(const std::map<std::string, std::string>& p, const std::string& text) {
    std::string path = param(p, "output", "");
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw cm::UsageError("cannot write " + path);
    out << text;
}

std::string number(double x) { return cm::format_number(x); }

// Mass as JSON: the exact value as a string next to its double.
template <class T>
json mass_json(const T& m) {
    if constexpr (std::is_same_v<T, cm::Rational>) {
        return {{"mass", cm::to_string(m)}, {"value", m.get_d()}};
    } else {
        return {{"value", m}};
    }
}

template <class T>
std::string mass_text(const T& m) {
    if constexpr (std::is_same_v<T, cm::Rational>) {
        return cm::to_string(m);
    } else {
        return number(m);
    }
}

template <class T>
bool same_mass(const T& a, const T& b) {
    if constexpr (std::is_same_v<T, cm::Rational>) {
        return a == b;
    } else {
        return std::abs(a - b) <= 1e-10;
    }
}

template <class Key, class T>
bool same_pmf(const cm::Pmf<Key, T>& a, const cm::Pmf<Key, T>& b) {
    if (a.support != b.support) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!same_mass(a.mass[i], b.mass[i])) return false;
    }
    return true;
}

// ---- hn ----

template <class T>
int run_hn(const std::map<std::string, std::string>& p, const Options& opts, const Family& f) {
    std::vector<int> ns = p.count("n-grid") ? int_list(p.at("n-grid"), "n-grid") : std::vector<int>{};
    if (ns.empty()) {
        int n = int_param(p, "n", 10);
        if (n < 1) throw cm::UsageError("--n must be >= 1");
        for (int i = 1; i <= n; ++i) ns.push_back(i);
    }
    int top = *std::max_element(ns.begin(), ns.end());
    if (*std::min_element(ns.begin(), ns.end()) < 1) throw cm::UsageError("n must be >= 1");
    std::vector<T> h = f.weighted ? cm::normalization_constants<T>(f.weighted->weights, top)
                                  : cm::generalized_normalization<T>(*f.generalized, top);
    std::optional<cm::SingularityClass> cls = f.weighted ? f.weighted->singularity() : f.generalized_class;
    bool with_ratio = cls && cls->theta > 0;

    if (opts.oracle) {
        for (int n : ns) {
            T brute = f.weighted ? cm::brute_force_normalization<T>(f.weighted->weights, n)
                                 : cm::generalized_partition_oracle<T>(*f.generalized, n).normalization;
            if (!same_mass(h[n], brute)) {
                throw MathFailure("h_" + std::to_string(n) + " disagrees with the partition oracle");
            }
        }
    }

    json rows = json::array();
    std::ostringstream csv;
    csv << "n,h_n" << (with_ratio ? ",asymptotic_hn,ratio" : "") << "\n";
    for (int n : ns) {
        json row = {{"n", n}, {"h_n", mass_text(h[n])}, {"h_n_value", cm::to_double(h[n])}};
        csv << n << ',' << mass_text(h[n]);
        if (with_ratio) {
            double a = cm::asymptotic_hn(*cls, n);
            double ratio = cm::to_double(h[n]) / a;
            row["asymptotic_hn"] = a;
            row["ratio"] = ratio;
            csv << ',' << number(a) << ',' << number(ratio);
        }
        csv << '\n';
        rows.push_back(row);
    }
    if (json_format(p)) {
        json out = {{"family", f.name}, {"backend", cm::scalar_kind_of<T>() == cm::ScalarKind::exact_rational ? "exact" : "double"}, {"rows", rows}};
        emit(p, out.dump(2) + "\n");
    } else {
        emit(p, csv.str());
    }
    return 0;
}

// ---- dist ----

template <class T>
int run_dist(const std::map<std::string, std::string>& p, const Options& opts, const Family& f) {
    int n = int_param(p, "n", 10);
    if (n < 1) throw cm::UsageError("--n must be >= 1");
    std::string target = param(p, "target", "k");
    bool as_json = json_format(p);
    json entries = json::array();
    std::ostringstream csv;

    if (target == "k") {
        cm::IntPmf<T> pmf = f.weighted ? cm::total_cycles_pmf<T>(f.weighted->weights, n)
                                       : cm::generalized_total_cycles_pmf<T>(*f.generalized, n);
        if (opts.oracle) {
            cm::IntPmf<T> brute =
                f.weighted ? cm::brute_force_k_pmf<T>(f.weighted->weights, n)
                           : cm::length_marginal(cm::generalized_partition_oracle<T>(*f.generalized, n).pmf, n);
            // The brute-force law lists only attained k.
            cm::IntPmf<T> dense;
            for (int k = 1; k <= n; ++k) {
                dense.support.push_back(k);
                dense.mass.push_back(brute.at(k));
            }
            if (!same_pmf(pmf, dense)) throw MathFailure("law of K disagrees with the partition oracle");
        }
        csv << "k,mass\n";
        for (std::size_t i = 0; i < pmf.size(); ++i) {
            if (pmf.mass[i] == 0) continue;
            json e = mass_json(pmf.mass[i]);
            e["k"] = pmf.support[i];
            entries.push_back(e);
            csv << pmf.support[i] << ',' << mass_text(pmf.mass[i]) << '\n';
        }
    } else if (target == "cycles") {
        int b = int_param(p, "b", 1);
        cm::TuplePmf<T> pmf = f.weighted ? cm::joint_cycle_pmf<T>(f.weighted->weights, n, b)
                                         : cm::generalized_joint_cycle_pmf<T>(*f.generalized, n, b);
        if (opts.oracle) {
            auto law = f.weighted ? cm::brute_force_cycle_type_pmf<T>(f.weighted->weights, n).pmf
                                  : cm::generalized_partition_oracle<T>(*f.generalized, n).pmf;
            if (!same_pmf(pmf, cm::cycle_count_marginal(law, n, b))) {
                throw MathFailure("joint cycle-count law disagrees with the partition oracle");
            }
        }
        csv << "counts,mass\n";
        for (std::size_t i = 0; i < pmf.size(); ++i) {
            if (pmf.mass[i] == 0) continue;
            json e = mass_json(pmf.mass[i]);
            e["counts"] = pmf.support[i];
            entries.push_back(e);
            std::string key;
            for (int c : pmf.support[i]) key += (key.empty() ? "" : " ") + std::to_string(c);
            csv << key << ',' << mass_text(pmf.mass[i]) << '\n';
        }
    } else {
        throw cm::UsageError("--target must be k or cycles");
    }
    if (as_json) {
        json out = {{"family", f.name}, {"target", target}, {"n", n}, {"pmf", entries}};
        if (target == "cycles") out["b"] = int_param(p, "b", 1);
        emit(p, out.dump(2) + "\n");
    } else {
        emit(p, csv.str());
    }
    return 0;
}

// ---- sample ----

int run_sample(const std::map<std::string, std::string>& p, const Options& opts, const Family& f) {
    if (!f.weighted) throw cm::UsageError("sampling supports weighted families only");
    int n = int_param(p, "n", 10);
    int count = int_param(p, "count", 1);
    if (n < 1) throw cm::UsageError("--n must be >= 1");
    if (count < 0) throw cm::UsageError("--count must be >= 0");
    std::uint64_t seed = 0;
    if (p.count("seed")) {
        try {
            seed = std::stoull(p.at("seed"));
        } catch (const std::exception&) {
            throw cm::UsageError("--seed expects a nonnegative integer");
        }
    }
    cm::CycleSampler sampler(f.weighted->weights, n);
    std::ostringstream os;
    if (opts.cycle_type_only) {
        for (const auto& lambda : cm::sample_cycle_types(sampler, static_cast<std::size_t>(count), seed)) {
            os << json{{"cycle_type", lambda.parts()}}.dump() << '\n';
        }
    } else {
        for (const auto& perm : cm::sample_permutations(sampler, static_cast<std::size_t>(count), seed)) {
            os << json{{"permutation", perm}}.dump() << '\n';
        }
    }
    emit(p, os.str());
    return 0;
}

// ---- report ----

int run_report(const std::map<std::string, std::string>& p, const Options& opts, const Family& f) {
    if (!f.weighted) throw cm::UsageError("reports support weighted families only");
    const cm::WeightFamily& fam = *f.weighted;
    std::string kind = param(p, "kind", "");
    bool as_json = json_format(p);

    if (kind == "large-dev") {
        int n = int_param(p, "n", 3000);
        std::string kspec = param(p, "k", "auto+3sigma");
        std::optional<int> k;
        double sigmas = 3;
        if (kspec.rfind("auto", 0) == 0) {
            std::string rest = kspec.substr(4);
            if (!rest.empty()) {
                if (rest.front() != '+' || rest.size() < 7 || rest.substr(rest.size() - 5) != "sigma") {
                    throw cm::UsageError("--k expects an integer or auto+<N>sigma");
                }
                try {
                    sigmas = std::stod(rest.substr(1, rest.size() - 6));
                } catch (const std::exception&) {
                    throw cm::UsageError("--k expects an integer or auto+<N>sigma");
                }
            }
        } else {
            k = int_param(p, "k", 0);
        }
        cm::LargeDeviationReport r = cm::large_deviation_report(fam, n, k, sigmas);
        emit(p, as_json ? cm::to_json(r) : cm::to_csv(r));
        return 0;
    }

    std::vector<int> grid;
    if (p.count("n-grid")) {
        grid = int_list(p.at("n-grid"), "n-grid");
    } else if (p.count("n")) {
        grid = {int_param(p, "n", 0)};
    } else if (kind == "clt" || kind == "poisson-k") {
        grid = {100, 300, 1000, 3000};
    } else {
        grid = {50, 100, 200, 400, 800};
    }

    std::vector<cm::ComparisonReport> reports;
    if (kind == "poisson-vector") {
        reports = cm::poisson_vector_report(fam, int_param(p, "b", 2), grid);
    } else if (kind == "mod-poisson") {
        std::vector<double> s(std::begin(cm::kDefaultSGrid), std::end(cm::kDefaultSGrid));
        if (p.count("s-grid")) s = double_list(p.at("s-grid"), "s-grid");
        reports = {cm::mod_poisson_report(fam, grid, s)};
    } else if (kind == "clt") {
        reports = cm::clt_report(fam, grid);
    } else if (kind == "poisson-k") {
        reports = cm::poisson_k_approx_report(fam, grid);
    } else {
        throw cm::UsageError("--kind must be poisson-vector, mod-poisson, clt, poisson-k or large-dev");
    }
    emit(p, as_json ? cm::to_json(reports) : cm::to_csv(reports));

    if (opts.assert_trends) {
        for (const auto& r : reports) {
            if (!cm::nonincreasing_trend(r.values)) throw TrendFailure(r.kind + " " + r.metric + " is not decreasing");
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact cycle statistics of weighted random permutations"};
    app.require_subcommand(1);
    Options opts;
    std::map<std::string, CLI::App*> cmds;
    for (const char* name : {"hn", "dist", "sample", "report"}) {
        cmds[name] = app.add_subcommand(name);
        add_common(cmds[name], opts);
    }
    cmds["hn"]->description("normalization constants h_n with their asymptotics");
    cmds["dist"]->description("exact law of K_0n (--target k) or of (C_1..C_b) (--target cycles)");
    cmds["sample"]->description("draw permutations, one JSON line each");
    cmds["report"]->description("convergence reports: poisson-vector, mod-poisson, clt, poisson-k, large-dev");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        auto params = resolve_parameters(opts);
        Family family = resolve_family(params);
        if (cmds["hn"]->parsed()) {
            return exact_backend(params, "exact") ? run_hn<cm::Rational>(params, opts, family)
                                                  : run_hn<double>(params, opts, family);
        }
        if (cmds["dist"]->parsed()) {
            return exact_backend(params, "exact") ? run_dist<cm::Rational>(params, opts, family)
                                                  : run_dist<double>(params, opts, family);
        }
        if (cmds["sample"]->parsed()) return run_sample(params, opts, family);
        return run_report(params, opts, family);
    } catch (const cm::UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const cm::UnsupportedClassError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const cm::ResourceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const TrendFailure& e) {
        std::cerr << "trend assertion failed: " << e.what() << '\n';
        return kExitTrend;
    } catch (const MathFailure& e) {
        std::cerr << "inconsistency: " << e.what() << '\n';
        return kExitMath;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMath;
    } catch (const cm::ConvergenceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMath;
    }
}
