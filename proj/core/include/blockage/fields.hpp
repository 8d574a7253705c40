#pragma once

#include <complex>

#include "blockage/geometry.hpp"

namespace blockage {

/// One complex E-field sample. Convention: time dependence e^{+j w t},
/// outgoing waves carry e^{-j k r}. The absolute amplitude is arbitrary
/// but fixed (unit dipole moment); all derived quantities are ratios.
using ComplexSample = std::complex<double>;

/// c / f with c exact. Throws InvalidFrequency for f <= 0 or non-finite f.
double wavelength(double frequency_hz);

/// 2 pi / lambda.
double wavenumber(double frequency_hz);

/// Complete (radiation + induction + quasi-static) field of the dipole,
/// theta-component taken as the scalar amplitude:
///   E = sin(theta) * e^{-jkr} * (1/r + 1/(jk r^2) - 1/(k^2 r^3))
/// Throws SingularPoint when the evaluation point coincides with the
/// source position.
ComplexSample free_space_field(const DipoleSource& source, const Vec3& point, double k);

} // namespace blockage
