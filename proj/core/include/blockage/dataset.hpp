#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "blockage/diffraction.hpp"
#include "blockage/geometry.hpp"

namespace blockage {

inline constexpr std::array<char, 4> kDatasetMagic = {'B', 'L', 'K', 'F'};
inline constexpr std::uint32_t kDatasetVersion = 1;
/// Convention flag: 1 = time dependence e^{+j w t}, outgoing e^{-j k r}.
inline constexpr std::uint8_t kConventionExpPlusJwt = 1;

/// One body state of the dataset. The absolute pose is
/// (nominal_x + dx, nominal_y + dy, theta_deg); state 0 is reserved for
/// free space and carries all zeros.
struct StateRecord {
    std::uint32_t state_id = 0;
    double nominal_x = 0.0;
    double nominal_y = 0.0;
    double dx = 0.0;
    double dy = 0.0;
    double theta_deg = 0.0;
};

/// Self-describing header of the binary dataset (all integers and floats
/// little-endian). Layout, in order:
///   magic "BLKF" (4 bytes), version u32, frequency_hz f64, standoff_d f64,
///   dims u32 x3 (n_surfaces, n_rows, n_cols), spacing_m f64,
///   body f64 x6 (height, width, thickness, rel_permittivity,
///   loss_tangent, mass_density), convention u8, state_count u32,
///   state records (u32 + f64 x5 each).
/// Samples follow as f64 (re, im) pairs in (state, surface, row, col)
/// order.
struct DatasetHeader {
    std::uint32_t version = kDatasetVersion;
    double frequency_hz = 0.0;
    double standoff_d = 0.0;
    GridDims dims{};
    double spacing = 0.0;
    double body_height = 0.0;
    double body_width = 0.0;
    double body_thickness = 0.0;
    double rel_permittivity = 0.0;
    double loss_tangent = 0.0;
    double mass_density = 0.0;
    std::uint8_t convention = kConventionExpPlusJwt;
    std::vector<StateRecord> states; // states[0] = free space
};

/// Header byte count for the given state count.
std::uint64_t dataset_header_size(std::size_t state_count);

/// Total file size implied by a header (header + samples).
std::uint64_t dataset_file_size(const DatasetHeader& header);

/// Writes header + grids. One grid per state, dims matching the header;
/// round-trips bit-exactly through read_dataset. Throws DimsMismatch and
/// IoError.
void write_dataset(const std::filesystem::path& path, const DatasetHeader& header,
                   std::span<const FieldGrid> grids);

struct Dataset {
    DatasetHeader header;
    std::vector<FieldGrid> grids; // indexed by state_id
};

/// Validates magic/version/size and loads all grids eagerly. Throws
/// BadMagic, UnsupportedVersion, Truncated (with the failing byte
/// offset), IoError.
Dataset read_dataset(const std::filesystem::path& path);

} // namespace blockage
