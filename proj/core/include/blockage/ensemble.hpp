#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "blockage/geometry.hpp"

namespace blockage {

/// One micro-movement: a small planar translation plus a heading change.
struct MicroMove {
    double dx = 0.0;        // m
    double dy = 0.0;        // m
    double theta_deg = 0.0; // absolute heading of the resulting state
};

/// The 36 micro-movements around a nominal pose: translations
/// {-lambda/4, 0, +lambda/4}^2 crossed with headings {0, 45, 90, 135} deg.
/// Ordering is translation-major ((dx, dy) lexicographic), rotation-minor.
std::vector<MicroMove> micro_moves(double lambda);

/// micro_moves applied to a nominal pose; exactly 36 poses, z fixed at 0.
std::vector<Pose> microstates(const Pose& nominal, double lambda);

/// Uniform probability weights, renormalized so the sum is exactly 1.
/// Throws ZeroStates for n == 0.
std::vector<double> uniform_weights(std::size_t n);

/// The three nominal body positions: (2, 0), (2, 0.25), (2, 0.50) m,
/// default heading.
std::array<Pose, 3> nominal_positions();

} // namespace blockage
