#include "blockage/fields.hpp"

#include <cmath>
#include <numbers>

namespace blockage {

double wavelength(double frequency_hz) {
    if (!(frequency_hz > 0.0) || !std::isfinite(frequency_hz))
        fail(ErrorCode::InvalidFrequency, "frequency must be a positive finite value");
    return kSpeedOfLight / frequency_hz;
}

double wavenumber(double frequency_hz) {
    return 2.0 * std::numbers::pi / wavelength(frequency_hz);
}

ComplexSample free_space_field(const DipoleSource& source, const Vec3& point, double k) {
    const Vec3 rel = point - source.position;
    const double r2 = dot(rel, rel);
    if (r2 <= 0.0)
        fail(ErrorCode::SingularPoint, "field requested at the source position");
    const double r = std::sqrt(r2);

    const double cos_theta = dot(rel, source.axis) / r;
    const double sin_theta = std::sqrt(std::max(0.0, 1.0 - cos_theta * cos_theta));

    // sin(theta) e^{-jkr} (1/r + 1/(jk r^2) - 1/(k^2 r^3)); the 1/r term
    // dominates for kr >> 1 but the induction and quasi-static terms
    // matter for quadrature points close to the source.
    const double kr = k * r;
    const ComplexSample radial(1.0 / r - 1.0 / (k * k * r * r2), -1.0 / (k * r2));
    return sin_theta * std::polar(1.0, -kr) * radial;
}

} // namespace blockage
