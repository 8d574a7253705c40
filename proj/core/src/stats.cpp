#include "blockage/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace blockage {

namespace {

std::uint32_t snap_index(double coord, double spacing, std::uint32_t count) {
    const double center = (count - 1) / 2.0;
    double idx = std::round(coord / spacing + center);
    if (idx < 0.0)
        idx = 0.0;
    if (idx > double(count - 1))
        idx = double(count - 1);
    return std::uint32_t(idx);
}

} // namespace

LineArraySelection select_line_array(const ArrayManifold& manifold, std::uint32_t row,
                                     std::uint32_t col) {
    if (row >= manifold.n_rows || col >= manifold.n_cols)
        fail(ErrorCode::OutOfRange, "line array (row, col) outside the manifold");

    LineArraySelection sel;
    sel.row = row;
    sel.col = col;
    const Vec3 p = manifold.point(0, row, col);
    sel.y = p.y;
    sel.z = p.z;
    sel.flat_indices.reserve(manifold.n_surfaces);
    for (std::uint32_t s = 0; s < manifold.n_surfaces; ++s) {
        const std::uint64_t flat =
            (std::uint64_t(s) * manifold.n_rows + row) * manifold.n_cols + col;
        sel.flat_indices.push_back(flat);
    }
    return sel;
}

LineArraySelection select_line_array(const ArrayManifold& manifold, char name) {
    double target_y = 0.0;
    double target_z = 0.0;
    switch (name) {
    case 'A':
        target_y = 0.536;
        target_z = 1.07;
        break;
    case 'B':
        break;
    case 'C':
        target_y = -0.536;
        target_z = -1.07;
        break;
    default:
        fail(ErrorCode::OutOfRange, "named line arrays are A, B and C");
    }
    const std::uint32_t row = snap_index(target_z, manifold.spacing, manifold.n_rows);
    const std::uint32_t col = snap_index(target_y, manifold.spacing, manifold.n_cols);
    return select_line_array(manifold, row, col);
}

Histogram pmf(std::span<const double> samples, double bin_width) {
    if (samples.empty())
        fail(ErrorCode::EmptySamples, "pmf needs at least one sample");
    if (!(bin_width > 0.0) || !std::isfinite(bin_width))
        fail(ErrorCode::BadBinWidth, "bin width must be positive");

    long min_bin = std::numeric_limits<long>::max();
    long max_bin = std::numeric_limits<long>::min();
    for (double v : samples) {
        const long b = long(std::floor(v / bin_width));
        min_bin = std::min(min_bin, b);
        max_bin = std::max(max_bin, b);
    }

    Histogram hist;
    hist.bin_width = bin_width;
    const std::size_t n_bins = std::size_t(max_bin - min_bin + 1);
    hist.counts.assign(n_bins, 0);
    hist.edges.resize(n_bins + 1);
    for (std::size_t i = 0; i <= n_bins; ++i)
        hist.edges[i] = double(min_bin + long(i)) * bin_width;
    for (double v : samples)
        ++hist.counts[std::size_t(long(std::floor(v / bin_width)) - min_bin)];

    hist.probabilities.resize(n_bins);
    for (std::size_t i = 0; i < n_bins; ++i)
        hist.probabilities[i] = double(hist.counts[i]) / double(samples.size());
    return hist;
}

Summary summarize(std::span<const double> samples) {
    if (samples.empty())
        fail(ErrorCode::EmptySamples, "summary needs at least one sample");

    Summary s;
    s.count = samples.size();
    double sum = 0.0;
    s.min = samples[0];
    s.max = samples[0];
    for (double v : samples) {
        sum += v;
        s.min = std::min(s.min, v);
        s.max = std::max(s.max, v);
    }
    s.mean = sum / double(samples.size());

    double varsum = 0.0;
    for (double v : samples) {
        const double d = v - s.mean;
        varsum += d * d;
    }
    s.stddev = std::sqrt(varsum / double(samples.size()));

    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    const std::size_t mid = sorted.size() / 2;
    s.median = (sorted.size() % 2 == 1) ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
    return s;
}

} // namespace blockage
