#pragma once

#include <filesystem>
#include <ostream>

#include "blockage/imaging.hpp"
#include "blockage/stats.hpp"

namespace blockage {

/// Row-major CSV matrix, 6 significant digits. Row 0 is the lowest z.
void write_csv_matrix(const std::filesystem::path& path, const AttenuationMap& map);

/// 16-bit binary PGM (maxval 65535, big-endian raster per the format).
/// Values map linearly min -> 0, max -> 65535; the raster is written top
/// row (highest z) first. A sidecar text file `<path>.txt` records the
/// min/max and the mapping so raw values can be reconstructed.
void write_pgm16(const std::filesystem::path& path, const AttenuationMap& map);

/// PMF CSV: comment header (selection, summary), then
/// `bin_left,bin_right,probability` rows.
void write_pmf_csv(std::ostream& out, const Histogram& histogram, const Summary& summary,
                   const LineArraySelection& selection, char array_name);

} // namespace blockage
