#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "blockage/diffraction.hpp"

namespace blockage {

/// Attenuation values above this are clamped so maps stay finite even
/// where |E| underflows to zero.
inline constexpr double kAttenuationCapDb = 150.0;

enum class MapKind : std::uint8_t { SingleState = 0, Mean = 1, Std = 2 };

/// Per-receiver dB grid for one 2D surface (single state, ensemble mean,
/// or ensemble standard deviation).
struct AttenuationMap {
    std::uint32_t n_rows = 0;
    std::uint32_t n_cols = 0;
    std::vector<double> values; // row-major
    MapKind kind = MapKind::SingleState;

    double at(std::uint32_t r, std::uint32_t c) const { return values[std::size_t(r) * n_cols + c]; }
    double& at(std::uint32_t r, std::uint32_t c) { return values[std::size_t(r) * n_cols + c]; }
};

/// -10 log10 |E/E0|^2, clamped at kAttenuationCapDb. Throws ZeroReference
/// when |E0| == 0.
double attenuation_db(ComplexSample e, ComplexSample e0);

/// Attenuation of one state grid against the free-space grid, for one
/// surface index. Throws DimsMismatch when the grids disagree.
AttenuationMap attenuation_map(const FieldGrid& state, const FieldGrid& free_space,
                               std::uint32_t surface);

/// Weighted per-cell average of the dB values (the attenuation itself is
/// averaged, not the linear field).
AttenuationMap mean_map(std::span<const AttenuationMap> stack, std::span<const double> weights);

/// Weighted per-cell standard deviation about a previously computed mean.
AttenuationMap std_map(std::span<const AttenuationMap> stack, const AttenuationMap& mean,
                       std::span<const double> weights);

} // namespace blockage
