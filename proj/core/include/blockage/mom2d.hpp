#pragma once

#include <complex>
#include <span>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "blockage/fields.hpp"

namespace blockage {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

/// One straight element of a discretized cross-section contour.
struct Segment {
    Vec2 midpoint{};
    double length = 0.0;
    Vec2 tangent{}; // unit
};

/// Closed polyline approximation of a smooth contour. Segment lengths are
/// bounded by lambda/10 (enforced at discretization time).
struct Contour {
    std::vector<Segment> segments;
    double total_length = 0.0;
};

struct CircleShape {
    double radius = 0.0;
};
struct EllipseShape {
    double a = 0.0; // semi-axis along x
    double b = 0.0; // semi-axis along y
};
using ContourShape = std::variant<CircleShape, EllipseShape>;

/// Splits the contour into equal-arc segments of at most
/// lambda / segments_per_wavelength. Throws TooCoarse below 10 segments
/// per wavelength and InvalidValue for degenerate shapes.
Contour discretize_contour(const ContourShape& shape, int segments_per_wavelength, double k,
                           Vec2 center = {});

/// Dense EFIE system: pulse basis, point matching. matrix(m, n) is the
/// field at match point m radiated by unit current on segment n;
/// excitation(m) is the incident field at match point m.
struct ImpedanceSystem {
    Eigen::MatrixXcd matrix;
    Eigen::VectorXcd excitation;
};

/// Unit-amplitude line-source incident field, outgoing cylindrical wave
/// H0^(2)(k |p - source|).
ComplexSample incident_field_2d(const Vec2& source, const Vec2& point, double k);

/// Assembles the EFIE system for a perfectly conducting contour under
/// line-source excitation. The source must lie off the contour.
ImpedanceSystem assemble(const Contour& contour, const Vec2& source, double k);

/// Direct dense solve. Throws SingularMatrix near internal-resonance
/// frequencies (remedy: perturb k slightly).
Eigen::VectorXcd solve(const ImpedanceSystem& system);

Eigen::VectorXcd assemble_and_solve(const Contour& contour, const Vec2& source, double k);

/// Field radiated by the solved surface currents.
ComplexSample scattered_field_2d(const Contour& contour, const Eigen::VectorXcd& currents,
                                 const Vec2& point, double k);

/// Incident + scattered. Throws PointOnContour when the point touches a
/// segment (within a quarter segment length).
ComplexSample total_field_2d(const Contour& contour, const Eigen::VectorXcd& currents,
                             const Vec2& point, const Vec2& source, double k);

/// Analytic reference for the circular cylinder: cylindrical-harmonics
/// series of the field scattered from a PEC circle of given radius
/// centered at `center`, line source at `source`. Independent of the
/// discretized solver path.
ComplexSample cylinder_scattered_series(double radius, const Vec2& center, const Vec2& source,
                                        const Vec2& point, double k, int n_terms = 40);

ComplexSample cylinder_total_series(double radius, const Vec2& center, const Vec2& source,
                                    const Vec2& point, double k, int n_terms = 40);

/// Cross-model diagnostic between two transverse attenuation slices
/// through the shadow (same geometry, same sample count).
struct ShadowCompareReport {
    int peak_offset_cells = 0;    // argmax(mom) - argmax(reference)
    double mean_abs_diff_db = 0.0;
};

/// Throws LengthMismatch when the slices differ in length.
ShadowCompareReport shadow_profile_compare(std::span<const double> mom_slice,
                                           std::span<const double> reference_slice);

} // namespace blockage
