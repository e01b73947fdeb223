#include "cyclemeter/catalog.hpp"

#include "cyclemeter/error.hpp"
#include "cyclemeter/special.hpp"

#include <algorithm>
#include <cmath>

namespace cyclemeter {

std::string to_string(ClassStatus status) {
    switch (status) {
    case ClassStatus::supported: return "supported";
    case ClassStatus::main_term_zero: return "main-term-zero";
    case ClassStatus::unsupported: return "unsupported";
    case ClassStatus::open: return "open";
    case ClassStatus::zero_radius: return "zero-radius";
    }
    return "unknown";
}

const SingularityClass& WeightFamily::require_class() const {
    if (status == ClassStatus::zero_radius) {
        throw UnsupportedClassError("family '" + weights.name() + "' has zero radius of convergence");
    }
    if (!weights.singularity()) {
        throw UnsupportedClassError("family '" + weights.name() + "' has no singularity class (" +
                                    to_string(status) + (note.empty() ? "" : ": " + note) + ")");
    }
    return *weights.singularity();
}

namespace {

// q^k for integer k >= 0.
Rational rational_pow(const Rational& q, long k) {
    Rational r(1);
    for (long i = 0; i < k; ++i) r *= q;
    return r;
}

std::optional<long> as_integer(const Rational& q) {
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) return std::nullopt;
    return q.get_num().get_si();
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

} // namespace

WeightFamily ewens_family(const Rational& theta) {
    if (theta <= 0) throw UsageError("Ewens family needs theta > 0");
    auto w = WeightSequence::constant(theta, "ewens(" + theta.get_str() + ")");
    return {w.with_singularity(SingularityClass::F(1.0, theta.get_d(), 0.0)), ClassStatus::supported, "ewens", ""};
}

WeightFamily theta_shift_family(const Rational& theta, const Rational& amplitude, const Rational& power) {
    if (theta <= 0) throw UsageError("theta-shift family needs theta > 0");
    if (power <= 0) throw UsageError("theta-shift family needs a positive power");
    if (theta + amplitude < 0) throw UsageError("theta-shift weights must stay nonnegative");
    const double th = theta.get_d();
    const double a = amplitude.get_d();
    const double q = power.get_d();
    WeightSequence::ExactRule exact;
    if (auto k = as_integer(power)) {
        exact = [theta, amplitude, k = *k](int m) { return Rational(theta + amplitude / rational_pow(Rational(m), k)); };
    }
    std::string name = "theta-shift(" + theta.get_str() + "+" + amplitude.get_str() + "/m^" + power.get_str() + ")";
    WeightSequence w(name, [th, a, q](int m) { return th + a * std::pow(static_cast<double>(m), -q); }, exact);
    const double K = a * riemann_zeta(q + 1);
    const double gamma = std::min(q, 1.0);
    std::string note = q > 1 ? "sum |theta_m - theta| converges" : "only sum |theta_m - theta|/m converges; error term o(1)";
    return {w.with_singularity(SingularityClass::eF(1.0, th, K, gamma)), ClassStatus::supported, "theta-shift", note};
}

WeightFamily polylog_family(const Rational& delta) {
    if (delta == 0) {
        WeightFamily f = ewens_family(Rational(1));
        f.provenance = "polylog";
        f.note = "delta = 0 reduces to the uniform measure";
        return f;
    }
    const double d = delta.get_d();
    WeightSequence::ExactRule exact;
    if (auto k = as_integer(delta); k && *k > 0) {
        exact = [k = *k](int m) { return rational_pow(Rational(m), k); };
    }
    WeightSequence w("polylog(" + delta.get_str() + ")",
                     [d](int m) { return std::pow(static_cast<double>(m), d); }, exact);
    if (d < 0) {
        return {w, ClassStatus::unsupported, "polylog", "Li_{1+delta} with delta < 0 is neither of class F nor eF"};
    }
    return {w.with_singularity(SingularityClass::F(1.0, 0.0, riemann_zeta(d + 1))), ClassStatus::main_term_zero,
            "polylog", "theta = 0: the Gamma(0) main term vanishes"};
}

WeightFamily exp_weight_family(double c, double theta_exp) {
    if (!std::isfinite(c) || !std::isfinite(theta_exp)) throw UsageError("exp-weight parameters must be finite");
    std::string name = "exp-weight(c=" + fmt(c) + ",theta=" + fmt(theta_exp) + ")";
    WeightSequence w(name, [c, theta_exp](int m) { return std::exp(c * std::pow(static_cast<double>(m), theta_exp)); });
    if (c == 0) {
        WeightFamily f = ewens_family(Rational(1));
        f.weights = WeightSequence::constant(Rational(1), name).with_singularity(SingularityClass::F(1.0, 1.0, 0.0));
        f.provenance = "exp-weight";
        f.note = "c = 0 reduces to the uniform measure";
        return f;
    }
    if (theta_exp == 0) {
        return {w.with_singularity(SingularityClass::F(1.0, std::exp(c), 0.0)), ClassStatus::supported, "exp-weight",
                "constant weights e^c"};
    }
    if (theta_exp == 1) {
        // g = -log(1 - t e^c)
        return {w.with_singularity(SingularityClass::F(std::exp(-c), 1.0, 0.0)), ClassStatus::supported,
                "exp-weight", "g = -log(1 - t e^c)"};
    }
    if (theta_exp < 0) {
        // K = sum_{k>=1} c^k/k! zeta(1 - k theta_exp)
        double K = 0;
        double coeff = 1;
        for (int k = 1; k < 200; ++k) {
            coeff *= c / k;
            double term = coeff * riemann_zeta(1 - k * theta_exp);
            K += term;
            if (std::abs(term) < 1e-18 * std::max(1.0, std::abs(K))) break;
        }
        return {w.with_singularity(SingularityClass::F(1.0, 1.0, K)), ClassStatus::supported, "exp-weight",
                "sum of polylogarithms Li_{1-k theta}"};
    }
    if (theta_exp < 1) {
        if (c < 0) {
            return {w, ClassStatus::unsupported, "exp-weight", "g tends to a constant at t = 1; neither F nor eF"};
        }
        return {w, ClassStatus::open, "exp-weight", "c > 0, 0 < theta < 1: behaviour of K_0n is open"};
    }
    if (c > 0) return {w, ClassStatus::zero_radius, "exp-weight", "radius of convergence 0"};
    return {w, ClassStatus::unsupported, "exp-weight", "infinite radius of convergence; no singularity"};
}

WeightFamily alpha_exp_family(double alpha, double amplitude, double power) {
    if (!(power > 0)) throw UsageError("alpha-exp family needs a positive power");
    std::string name = "alpha-exp(alpha=" + fmt(alpha) + "+" + fmt(amplitude) + "/m^" + fmt(power) + ")";
    WeightSequence w(name, [alpha, amplitude, power](int m) {
        return std::exp(-(alpha + amplitude * std::pow(static_cast<double>(m), -power)));
    });
    const double theta = std::exp(-alpha);
    const double K = theta_shift_constant(w, theta, power > 1 ? SummabilityMode::absolute : SummabilityMode::per_m);
    return {w.with_singularity(SingularityClass::eF(1.0, theta, K, std::min(power, 1.0))), ClassStatus::supported,
            "alpha-exp", "theta_m = exp(-alpha_m), alpha_m -> alpha"};
}

namespace {

struct TailSum {
    double value;
    double tail;
};

// sum_{m>=1} term(m) with a power-law tail extrapolation.
template <class Term>
TailSum sum_with_tail(Term term, const char* what) {
    constexpr long kMax = 1L << 24;
    double sum = 0;
    long m = 1;
    for (long M = 1024;; M *= 2) {
        for (; m <= M; ++m) sum += term(m);
        const double a = term(M);
        const double a_half = term(M / 2);
        if (a == 0 && a_half == 0) return {sum, 0};
        const double p = (a != 0 && a_half != 0) ? std::log(std::abs(a_half / a)) / std::log(2.0) : 1e9;
        if (p > 1.05) {
            // integral of a (x/M)^{-p} over (M, inf), minus the half-step term
            double tail = a * static_cast<double>(M) / (p - 1) - a / 2;
            if (std::abs(tail) < 1e-10 * std::max(1.0, std::abs(sum)) || M >= kMax) return {sum + tail, std::abs(tail)};
        } else if (M >= kMax) {
            throw ConvergenceError(std::string("partial sums of ") + what + " do not converge");
        }
    }
}

} // namespace

double theta_shift_constant(const WeightSequence& theta_seq, double theta_limit, SummabilityMode mode) {
    if (mode == SummabilityMode::absolute) {
        sum_with_tail([&](long m) { return std::abs(theta_seq(static_cast<int>(m)) - theta_limit); },
                      "|theta_m - theta|");
    }
    return sum_with_tail([&](long m) { return (theta_seq(static_cast<int>(m)) - theta_limit) / static_cast<double>(m); },
                         "(theta_m - theta)/m")
        .value;
}

namespace {

Rational rational_param(const FamilyParameters& p, const std::string& key, const std::string& fallback) {
    auto it = p.find(key);
    return parse_rational(it == p.end() ? fallback : it->second);
}

double double_param(const FamilyParameters& p, const std::string& key, const std::string& fallback) {
    return rational_param(p, key, fallback).get_d();
}

} // namespace

WeightFamily family_by_name(const std::string& name, const FamilyParameters& params) {
    if (name == "ewens") return ewens_family(rational_param(params, "theta", "1"));
    if (name == "theta-shift") {
        return theta_shift_family(rational_param(params, "theta", "1"), rational_param(params, "shift", "1"),
                                  rational_param(params, "shift-power", "2"));
    }
    if (name == "polylog") return polylog_family(rational_param(params, "delta", "1"));
    if (name == "exp-weight") {
        return exp_weight_family(double_param(params, "c", "1"), double_param(params, "theta-exp", "-1"));
    }
    if (name == "alpha-exp") {
        return alpha_exp_family(double_param(params, "alpha", "0"), double_param(params, "shift", "1"),
                                double_param(params, "shift-power", "2"));
    }
    throw UsageError("unknown weight family '" + name + "'");
}

} // namespace cyclemeter
