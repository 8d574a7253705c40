#include "blockage/dataset.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>

namespace blockage {

static_assert(std::endian::native == std::endian::little,
              "dataset writer assumes a little-endian host");

namespace {

constexpr std::uint64_t kStateRecordSize = 4 + 5 * 8;
constexpr std::uint64_t kFixedHeaderSize = 4 + 4 + 8 + 8 + 12 + 8 + 48 + 1 + 4;

class Writer {
public:
    explicit Writer(std::ostream& out) : out_(out) {}

    void u8(std::uint8_t v) { raw(&v, 1); }
    void u32(std::uint32_t v) { raw(&v, 4); }
    void f64(double v) { raw(&v, 8); }
    void bytes(const void* p, std::size_t n) { raw(p, n); }

private:
    void raw(const void* p, std::size_t n) {
        out_.write(static_cast<const char*>(p), std::streamsize(n));
    }
    std::ostream& out_;
};

class Reader {
public:
    Reader(std::istream& in, std::uint64_t file_size) : in_(in), file_size_(file_size) {}

    std::uint8_t u8() {
        std::uint8_t v;
        raw(&v, 1);
        return v;
    }
    std::uint32_t u32() {
        std::uint32_t v;
        raw(&v, 4);
        return v;
    }
    double f64() {
        double v;
        raw(&v, 8);
        return v;
    }
    void bytes(void* p, std::size_t n) { raw(p, n); }

    std::uint64_t offset() const { return offset_; }

private:
    void raw(void* p, std::size_t n) {
        in_.read(static_cast<char*>(p), std::streamsize(n));
        if (!in_) {
            std::ostringstream msg;
            msg << "file ends at byte " << file_size_ << ", needed " << n << " bytes at offset "
                << offset_;
            fail(ErrorCode::Truncated, msg.str());
        }
        offset_ += n;
    }
    std::istream& in_;
    std::uint64_t file_size_;
    std::uint64_t offset_ = 0;
};

} // namespace

std::uint64_t dataset_header_size(std::size_t state_count) {
    return kFixedHeaderSize + kStateRecordSize * state_count;
}

std::uint64_t dataset_file_size(const DatasetHeader& header) {
    return dataset_header_size(header.states.size()) +
           std::uint64_t(header.states.size()) * header.dims.count() * 16;
}

void write_dataset(const std::filesystem::path& path, const DatasetHeader& header,
                   std::span<const FieldGrid> grids) {
    if (grids.size() != header.states.size())
        fail(ErrorCode::DimsMismatch, "one grid per header state required");
    for (const FieldGrid& g : grids) {
        if (!(g.dims == header.dims))
            fail(ErrorCode::DimsMismatch, "grid dims do not match the header");
        if (g.samples.size() != g.dims.count())
            fail(ErrorCode::DimsMismatch, "grid sample count does not match its dims");
    }

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        fail(ErrorCode::IoError, "cannot open " + path.string() + " for writing");

    Writer w(out);
    w.bytes(kDatasetMagic.data(), kDatasetMagic.size());
    w.u32(header.version);
    w.f64(header.frequency_hz);
    w.f64(header.standoff_d);
    w.u32(header.dims.n_surfaces);
    w.u32(header.dims.n_rows);
    w.u32(header.dims.n_cols);
    w.f64(header.spacing);
    w.f64(header.body_height);
    w.f64(header.body_width);
    w.f64(header.body_thickness);
    w.f64(header.rel_permittivity);
    w.f64(header.loss_tangent);
    w.f64(header.mass_density);
    w.u8(header.convention);
    w.u32(std::uint32_t(header.states.size()));
    for (const StateRecord& s : header.states) {
        w.u32(s.state_id);
        w.f64(s.nominal_x);
        w.f64(s.nominal_y);
        w.f64(s.dx);
        w.f64(s.dy);
        w.f64(s.theta_deg);
    }
    for (const FieldGrid& g : grids)
        w.bytes(g.samples.data(), g.samples.size() * sizeof(ComplexSample));

    out.flush();
    if (!out)
        fail(ErrorCode::IoError, "write to " + path.string() + " failed");
}

Dataset read_dataset(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(ErrorCode::IoError, "cannot open " + path.string());
    const std::uint64_t file_size = std::filesystem::file_size(path);

    Reader r(in, file_size);
    std::array<char, 4> magic{};
    r.bytes(magic.data(), magic.size());
    if (magic != kDatasetMagic)
        fail(ErrorCode::BadMagic, "not a field dataset: " + path.string());

    Dataset ds;
    DatasetHeader& h = ds.header;
    h.version = r.u32();
    if (h.version != kDatasetVersion) {
        std::ostringstream msg;
        msg << "dataset version " << h.version << ", reader supports " << kDatasetVersion;
        fail(ErrorCode::UnsupportedVersion, msg.str());
    }
    h.frequency_hz = r.f64();
    h.standoff_d = r.f64();
    h.dims.n_surfaces = r.u32();
    h.dims.n_rows = r.u32();
    h.dims.n_cols = r.u32();
    h.spacing = r.f64();
    h.body_height = r.f64();
    h.body_width = r.f64();
    h.body_thickness = r.f64();
    h.rel_permittivity = r.f64();
    h.loss_tangent = r.f64();
    h.mass_density = r.f64();
    h.convention = r.u8();
    const std::uint32_t state_count = r.u32();
    h.states.resize(state_count);
    for (StateRecord& s : h.states) {
        s.state_id = r.u32();
        s.nominal_x = r.f64();
        s.nominal_y = r.f64();
        s.dx = r.f64();
        s.dy = r.f64();
        s.theta_deg = r.f64();
    }

    const std::uint64_t expected = dataset_file_size(h);
    if (file_size != expected) {
        std::ostringstream msg;
        msg << "expected " << expected << " bytes, file has " << file_size
            << " (sample section starts at byte " << r.offset() << ")";
        fail(ErrorCode::Truncated, msg.str());
    }

    ds.grids.resize(state_count);
    for (std::uint32_t i = 0; i < state_count; ++i) {
        FieldGrid& g = ds.grids[i];
        g.dims = h.dims;
        g.samples.resize(g.dims.count());
        r.bytes(g.samples.data(), g.samples.size() * sizeof(ComplexSample));
        if (i == 0) {
            g.state_id = kFreeSpaceStateId;
        } else {
            const StateRecord& s = h.states[i];
            std::ostringstream id;
            id << "pose x=" << s.nominal_x + s.dx << " y=" << s.nominal_y + s.dy
               << " theta=" << s.theta_deg;
            g.state_id = id.str();
        }
    }
    return ds;
}

} // namespace blockage
