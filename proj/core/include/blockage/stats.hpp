#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "blockage/geometry.hpp"

namespace blockage {

/// A 1D receiver array parallel to the LOS: one sample per surface at a
/// fixed (row, col). Named selections A/B/C snap to the nearest grid cell
/// of their target coordinates; the snapped (y, z) are echoed back.
struct LineArraySelection {
    std::uint32_t row = 0;
    std::uint32_t col = 0;
    double y = 0.0; // snapped coordinates, m
    double z = 0.0;
    std::vector<std::uint64_t> flat_indices; // one per surface, (s,r,c) order
};

/// Select by explicit (row, col). Throws OutOfRange.
LineArraySelection select_line_array(const ArrayManifold& manifold, std::uint32_t row,
                                     std::uint32_t col);

/// Select one of the named arrays:
///   A: (y, z) = (+0.536, +1.07) m   top-right corner region
///   B: (y, z) = (0, 0)              grid center
///   C: (y, z) = (-0.536, -1.07) m   bottom-left corner region
LineArraySelection select_line_array(const ArrayManifold& manifold, char name);

struct Histogram {
    double bin_width = 0.0;
    std::vector<double> edges;         // n_bins + 1 left-closed edges, anchored at 0
    std::vector<std::size_t> counts;   // per bin
    std::vector<double> probabilities; // counts / total
};

/// Left-closed bins [i*w, (i+1)*w) anchored at 0 dB. Throws EmptySamples
/// and BadBinWidth.
Histogram pmf(std::span<const double> samples, double bin_width);

struct Summary {
    double mean = 0.0;
    double stddev = 0.0; // population normalization
    double min = 0.0;
    double max = 0.0;
    double median = 0.0;
    std::size_t count = 0;
};

Summary summarize(std::span<const double> samples);

} // namespace blockage
