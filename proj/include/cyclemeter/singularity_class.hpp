#pragma once

#include <optional>

namespace cyclemeter {

enum class ClassKind { F, eF };

/// Disk of radius R slit by a cone of half-angle phi at the singularity.
/// Stored as metadata only.
struct DeltaGeometry {
    double R = 0;
    double phi = 0;
};

/// Declared analytic class of g near its dominant singularity r:
///   g(t) = theta * log(1/(1 - t/r)) + K + (remainder)
/// with an O(t - r) remainder for F and an O(r^-n n^{-1-gamma})
/// coefficient remainder for eF.
struct SingularityClass {
    ClassKind kind = ClassKind::F;
    double r = 1;
    double theta = 0;
    double K = 0;
    double gamma = 1;
    std::optional<DeltaGeometry> geometry;

    static SingularityClass F(double r, double theta, double K);
    static SingularityClass eF(double r, double theta, double K, double gamma);

    /// theta == 0: the 1/Gamma(theta w) main term vanishes at w = 1.
    bool main_term_zero() const { return theta == 0; }
};

} // namespace cyclemeter
