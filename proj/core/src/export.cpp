#include "blockage/export.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

namespace blockage {

namespace {

std::ofstream open_out(const std::filesystem::path& path, std::ios::openmode mode) {
    std::ofstream out(path, mode);
    if (!out)
        fail(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
    return out;
}

void format_value(char* buf, std::size_t n, double v) { std::snprintf(buf, n, "%.6g", v); }

} // namespace

void write_csv_matrix(const std::filesystem::path& path, const AttenuationMap& map) {
    std::ofstream out = open_out(path, std::ios::trunc);
    char buf[32];
    for (std::uint32_t r = 0; r < map.n_rows; ++r) {
        for (std::uint32_t c = 0; c < map.n_cols; ++c) {
            format_value(buf, sizeof(buf), map.at(r, c));
            if (c > 0)
                out << ',';
            out << buf;
        }
        out << '\n';
    }
    if (!out)
        fail(ErrorCode::IoError, "write to " + path.string() + " failed");
}

void write_pgm16(const std::filesystem::path& path, const AttenuationMap& map) {
    const auto [min_it, max_it] = std::minmax_element(map.values.begin(), map.values.end());
    const double lo = *min_it;
    const double hi = *max_it;
    const double span = hi - lo;

    std::ofstream out = open_out(path, std::ios::trunc | std::ios::binary);
    out << "P5\n" << map.n_cols << ' ' << map.n_rows << "\n65535\n";
    // top raster row = highest z (last map row)
    for (std::uint32_t rr = 0; rr < map.n_rows; ++rr) {
        const std::uint32_t r = map.n_rows - 1 - rr;
        for (std::uint32_t c = 0; c < map.n_cols; ++c) {
            const double f = span > 0.0 ? (map.at(r, c) - lo) / span : 0.0;
            const auto v = std::uint16_t(f * 65535.0 + 0.5);
            const char bytes[2] = {char(v >> 8), char(v & 0xff)}; // PGM is MSB first
            out.write(bytes, 2);
        }
    }
    if (!out)
        fail(ErrorCode::IoError, "write to " + path.string() + " failed");

    std::filesystem::path sidecar = path;
    sidecar += ".txt";
    std::ofstream meta = open_out(sidecar, std::ios::trunc);
    char buf[32];
    meta << "format: pgm16 linear\n";
    meta << "rows: " << map.n_rows << "\ncols: " << map.n_cols << '\n';
    format_value(buf, sizeof(buf), lo);
    meta << "min_db: " << buf << '\n';
    format_value(buf, sizeof(buf), hi);
    meta << "max_db: " << buf << '\n';
    meta << "mapping: value_db = min_db + pixel/65535 * (max_db - min_db)\n";
    meta << "orientation: top raster row is the highest z (map row n_rows-1)\n";
    if (!meta)
        fail(ErrorCode::IoError, "write to " + sidecar.string() + " failed");
}

void write_pmf_csv(std::ostream& out, const Histogram& histogram, const Summary& summary,
                   const LineArraySelection& selection, char array_name) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%.6g", selection.y);
    out << "# array " << array_name << ": row=" << selection.row << " col=" << selection.col
        << " y=" << buf;
    std::snprintf(buf, sizeof(buf), "%.6g", selection.z);
    out << " z=" << buf << '\n';
    std::snprintf(buf, sizeof(buf), "samples=%zu mean=%.6g std=%.6g min=%.6g max=%.6g median=%.6g",
                  summary.count, summary.mean, summary.stddev, summary.min, summary.max,
                  summary.median);
    out << "# " << buf << '\n';
    out << "bin_left,bin_right,probability\n";
    for (std::size_t i = 0; i < histogram.probabilities.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.6g,%.6g,%.9g", histogram.edges[i],
                      histogram.edges[i + 1], histogram.probabilities[i]);
        out << buf << '\n';
    }
}

} // namespace blockage
