#pragma once

#include "cyclemeter/rational.hpp"
#include "cyclemeter/singularity_class.hpp"
#include "cyclemeter/weights.hpp"

#include <map>
#include <optional>
#include <string>

namespace cyclemeter {

/// How the singularity analysis applies to a family.
enum class ClassStatus {
    supported,       ///< class F or eF with theta > 0
    main_term_zero,  ///< class F with theta = 0; Gamma(0) kills the main term
    unsupported,     ///< neither F nor eF
    open,            ///< behaviour not known
    zero_radius,     ///< g has radius of convergence 0
};

std::string to_string(ClassStatus status);

/// A weight sequence together with its declared analytic class.
struct WeightFamily {
    WeightSequence weights;
    ClassStatus status = ClassStatus::unsupported;
    std::string provenance;
    std::string note;

    const std::optional<SingularityClass>& singularity() const { return weights.singularity(); }
    /// The class, or UnsupportedClassError explaining why there is none.
    const SingularityClass& require_class() const;
};

/// theta_m = theta: class F(1, theta) with K = 0.
WeightFamily ewens_family(const Rational& theta);

/// theta_m = theta + amplitude * m^{-power} (power > 0): class
/// eF(1, theta, min(power, 1)) with K = amplitude * zeta(power + 1).
WeightFamily theta_shift_family(const Rational& theta, const Rational& amplitude, const Rational& power);

/// theta_m = m^delta (the polylogarithm Li_{1+delta} as g).
WeightFamily polylog_family(const Rational& delta);

/// theta_m = exp(c m^theta_exp).
WeightFamily exp_weight_family(double c, double theta_exp);

/// theta_m = exp(-alpha_m) with alpha_m = alpha + amplitude * m^{-power}:
/// class eF(1, e^{-alpha}, min(power, 1)).
WeightFamily alpha_exp_family(double alpha, double amplitude, double power);

enum class SummabilityMode {
    per_m,     ///< sum |theta_m - theta| / m < inf
    absolute,  ///< sum |theta_m - theta| < inf
};

/// K = sum_{m>=1} (theta_m - theta)/m, with an extrapolated tail. In
/// absolute mode the sum of |theta_m - theta| must converge as well.
/// Throws ConvergenceError when the partial sums do not settle.
double theta_shift_constant(const WeightSequence& theta_seq, double theta_limit, SummabilityMode mode);

/// Named parameters of a catalog family (strings as given on a command line
/// or in a config file).
using FamilyParameters = std::map<std::string, std::string>;

/// Builds a catalog family by name: ewens, theta-shift, polylog, exp-weight,
/// alpha-exp. Throws UsageError for unknown names or bad parameters.
WeightFamily family_by_name(const std::string& name, const FamilyParameters& params);

} // namespace cyclemeter
