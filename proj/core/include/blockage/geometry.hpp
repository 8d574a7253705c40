#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "blockage/errors.hpp"

namespace blockage {

inline constexpr double kSpeedOfLight = 299792458.0; // m/s, exact

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
double norm(const Vec3& v);

/// Infinitesimal dipole transmitter. The coordinate origin sits at the
/// source height, so the default position is the origin and the default
/// polarization is vertical (z).
struct DipoleSource {
    Vec3 position{0.0, 0.0, 0.0};
    Vec3 axis{0.0, 0.0, 1.0}; // unit polarization vector
};

enum class BodyKind : std::uint8_t {
    EllipticalCylinder = 0,
    RectangularScreen = 1, // flat screen, used for validation geometries
};

/// Stored for self-describing datasets; the absorbing-screen solver does
/// not consume these values.
struct BodyMaterial {
    double rel_permittivity = 60.0;
    double loss_tangent = 0.242;
    double mass_density = 1040.0; // kg/m^3
};

struct BodyModel {
    BodyKind kind = BodyKind::EllipticalCylinder;
    double height = 1.80;    // m, vertical extent
    double width = 0.52;     // m, major transverse size
    double thickness = 0.32; // m, minor transverse size
    BodyMaterial material{};
};

/// Receiver sample grid: n_surfaces vertical planes along x, each a
/// centered n_rows (vertical, z) x n_cols (horizontal, y) lattice.
///
/// Point (s, r, c) sits at
///   x = first_surface_x + s * spacing
///   y = (c - (n_cols - 1) / 2) * spacing
///   z = (r - (n_rows - 1) / 2) * spacing
struct ArrayManifold {
    std::uint32_t n_surfaces = 50;
    std::uint32_t n_rows = 180;
    std::uint32_t n_cols = 90;
    double spacing = 0.0;         // m
    double first_surface_x = 4.0; // m

    std::uint64_t count() const {
        return std::uint64_t(n_surfaces) * n_rows * n_cols;
    }
    Vec3 point(std::uint32_t s, std::uint32_t r, std::uint32_t c) const {
        return {first_surface_x + s * spacing,
                (c - (n_cols - 1) / 2.0) * spacing,
                (r - (n_rows - 1) / 2.0) * spacing};
    }
};

/// Planar body state. z is always 0: the body center shares the source
/// height by construction of the coordinate frame.
struct Pose {
    double x = 0.0;         // m
    double y = 0.0;         // m
    double theta_deg = 0.0; // heading w.r.t. default orientation
};

/// Projection of the body onto the vertical plane through its center,
/// the integration domain of the absorbing-screen solver.
struct SilhouetteRect {
    double y_min = 0.0;
    double y_max = 0.0;
    double z_min = 0.0;
    double z_max = 0.0;
    double plane_x = 0.0;

    double width() const { return y_max - y_min; }
    double height() const { return z_max - z_min; }
    double area() const { return width() * height(); }
};

/// Immutable scenario description. Built through build_scene(), which
/// enforces all invariants; treat instances as read-only afterwards.
struct Scene {
    double frequency_hz = 0.0;
    DipoleSource source{};
    BodyModel body{};
    ArrayManifold manifold{};
    double standoff_d = 0.0; // m, source to first surface along x

    double wavelength() const;
    double wavenumber() const;
};

/// Scenario knobs with the default deployment baked in: 2.4868 GHz,
/// 4 m standoff, 50 surfaces of 180x90 points spaced lambda/10, and the
/// 1.80 x 0.52 x 0.32 m absorbing elliptical-cylinder body.
struct SceneParams {
    double frequency_hz = 2.4868e9;
    double standoff_d = 4.0;
    std::uint32_t n_surfaces = 50;
    std::uint32_t n_rows = 180; // vertical (z) count per surface
    std::uint32_t n_cols = 90;  // horizontal (y) count per surface
    double spacing_over_lambda = 0.1;
    BodyModel body{};
};

/// Validates the parameter set and returns the finished scene.
/// Throws InvalidValue for non-positive dimensions or counts and
/// ManifoldTooSmall when the body silhouette exceeds the transverse
/// extent of a measurement surface.
Scene build_scene(const SceneParams& params = SceneParams{});

/// All manifold points in (surface, row, col) lexicographic order.
std::vector<Vec3> array_points(const ArrayManifold& manifold);

/// Width of the elliptical cross-section projected onto the transverse
/// y axis: 2*sqrt(a^2 cos^2 + b^2 sin^2) with a = width/2, b = thickness/2.
/// Throws WrongBodyKind for screen bodies (their width is orientation
/// independent).
double projected_width(const BodyModel& body, double theta_deg);

/// Silhouette of the body in the given pose: a rectangle in the plane
/// x = pose.x centered at (pose.y, 0), of the projected width and the
/// body height.
SilhouetteRect silhouette(const BodyModel& body, const Pose& pose);

} // namespace blockage
