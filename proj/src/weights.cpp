#include "cyclemeter/weights.hpp"

#include "cyclemeter/error.hpp"

#include <cmath>
#include <memory>

namespace cyclemeter {

namespace {

void require_index(int m) {
    if (m < 1) throw UsageError("weights are indexed from m = 1");
}

} // namespace

SingularityClass SingularityClass::F(double r, double theta, double K) {
    if (!(r > 0)) throw UsageError("class F needs r > 0");
    if (!(theta >= 0)) throw UsageError("class F needs theta >= 0");
    SingularityClass c;
    c.kind = ClassKind::F;
    c.r = r;
    c.theta = theta;
    c.K = K;
    return c;
}

SingularityClass SingularityClass::eF(double r, double theta, double K, double gamma) {
    if (!(gamma > 0 && gamma <= 1)) throw UsageError("class eF needs 0 < gamma <= 1");
    SingularityClass c = F(r, theta, K);
    c.kind = ClassKind::eF;
    c.gamma = gamma;
    return c;
}

WeightSequence::WeightSequence(std::string name, DoubleRule eval, ExactRule exact,
                               std::optional<SingularityClass> singularity)
    : name_(std::move(name)), eval_(std::move(eval)), exact_(std::move(exact)),
      singularity_(std::move(singularity)) {
    if (!eval_) throw UsageError("weight sequence needs an evaluation rule");
}

WeightSequence WeightSequence::constant(const Rational& theta, std::string name) {
    if (theta < 0) throw UsageError("weights must be nonnegative");
    double d = theta.get_d();
    return WeightSequence(
        name.empty() ? "constant(" + theta.get_str() + ")" : std::move(name), [d](int) { return d; },
        [theta](int) { return theta; });
}

WeightSequence WeightSequence::from_values(std::vector<Rational> values, const Rational& tail,
                                           std::string name) {
    for (const auto& v : values) {
        if (v < 0) throw UsageError("weights must be nonnegative");
    }
    if (tail < 0) throw UsageError("weights must be nonnegative");
    auto shared = std::make_shared<const std::vector<Rational>>(std::move(values));
    auto pick = [shared, tail](int m) -> Rational {
        auto i = static_cast<std::size_t>(m - 1);
        return i < shared->size() ? (*shared)[i] : tail;
    };
    return WeightSequence(
        name.empty() ? "explicit" : std::move(name), [pick](int m) { return pick(m).get_d(); }, pick);
}

WeightSequence WeightSequence::with_singularity(std::optional<SingularityClass> cls) const {
    WeightSequence copy = *this;
    copy.singularity_ = std::move(cls);
    return copy;
}

double WeightSequence::operator()(int m) const {
    require_index(m);
    double v = eval_(m);
    if (!(v >= 0) || !std::isfinite(v)) {
        throw UsageError("weight theta_" + std::to_string(m) + " of '" + name_ + "' is negative or not finite");
    }
    return v;
}

Rational WeightSequence::exact(int m) const {
    require_index(m);
    Rational v = exact_ ? exact_(m) : exact_from_double(eval_(m));
    if (v < 0) throw UsageError("weight theta_" + std::to_string(m) + " of '" + name_ + "' is negative");
    return v;
}

} // namespace cyclemeter
