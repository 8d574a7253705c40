#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "blockage/fields.hpp"
#include "blockage/geometry.hpp"

namespace blockage {

/// Midpoint-rule quadrature over the silhouette, refined by step halving
/// until two successive levels agree to tolerance * |E0| (Cauchy test).
struct QuadratureSpec {
    double initial_step = 0.0; // m, must be <= lambda/8
    double tolerance = 1e-3;   // relative to |E0|, in (0, 0.1)
    int max_refinements = 8;   // halvings allowed after the initial level
};

/// Default spec for a given wavelength: initial step lambda/8.
QuadratureSpec default_quadrature(double lambda);

struct BlockedField {
    ComplexSample value{};
    int refinement_level = 0; // level at which the Cauchy test passed
};

/// Field behind a perfectly absorbing screen: free-space field minus the
/// Kirchhoff contribution of the screen rectangle,
///   E = E0(p) - (j/lambda) * II_S E_inc(q) e^{-jk r2}/r2 * (1+cos chi)/2 dA.
/// A degenerate rectangle (zero width or height) yields E0 exactly.
/// Throws GeometryError when the receiver is not strictly behind the
/// screen plane and NoConvergence when max_refinements is exhausted.
BlockedField blocked_field(const DipoleSource& source, const SilhouetteRect& screen,
                           const Vec3& point, double k, const QuadratureSpec& quad);

/// Scene-level wrapper: screen = silhouette(scene.body, pose).
BlockedField blocked_field(const Scene& scene, const Pose& pose, const Vec3& point,
                           const QuadratureSpec& quad);

struct GridDims {
    std::uint32_t n_surfaces = 0;
    std::uint32_t n_rows = 0;
    std::uint32_t n_cols = 0;

    std::uint64_t count() const {
        return std::uint64_t(n_surfaces) * n_rows * n_cols;
    }
    bool operator==(const GridDims&) const = default;
};

/// Complex E samples for every manifold point of one body state (or free
/// space), stored in (surface, row, col) order.
struct FieldGrid {
    GridDims dims{};
    std::vector<ComplexSample> samples;
    std::string state_id;

    std::uint64_t index(std::uint32_t s, std::uint32_t r, std::uint32_t c) const {
        return (std::uint64_t(s) * dims.n_rows + r) * dims.n_cols + c;
    }
    ComplexSample at(std::uint32_t s, std::uint32_t r, std::uint32_t c) const {
        return samples[index(s, r, c)];
    }
};

inline constexpr const char* kFreeSpaceStateId = "free";

/// Evaluates every manifold point for one body state; pose == nullopt
/// computes the free-space reference (no integral). Points are evaluated
/// in parallel; sample values and ordering are independent of the thread
/// count. threads == 0 picks the hardware concurrency.
FieldGrid field_grid(const Scene& scene, const std::optional<Pose>& pose,
                     const QuadratureSpec& quad, unsigned threads = 0);

} // namespace blockage
