#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <vector>

#include "blockage/dataset.hpp"

using namespace blockage;
namespace fs = std::filesystem;

namespace {

struct TempFile {
    fs::path path;
    explicit TempFile(const char* name) {
        path = fs::temp_directory_path() / (std::string("blkf-test-") + name);
    }
    ~TempFile() { std::error_code ec; fs::remove(path, ec); }
};

DatasetHeader small_header() {
    DatasetHeader h;
    h.frequency_hz = 2.4868e9;
    h.standoff_d = 4.0;
    h.dims = {1, 2, 2};
    h.spacing = 0.0120553;
    h.body_height = 1.80;
    h.body_width = 0.52;
    h.body_thickness = 0.32;
    h.rel_permittivity = 60.0;
    h.loss_tangent = 0.242;
    h.mass_density = 1040.0;
    h.states = {{0, 0, 0, 0, 0, 0}, {1, 2.0, 0.25, 0.01, -0.01, 45.0}};
    return h;
}

std::vector<FieldGrid> small_grids() {
    FieldGrid free;
    free.dims = {1, 2, 2};
    free.samples = {{1.0, 0.0}, {0.5, 0.5}, {-0.25, 1.0}, {0.125, -0.125}};
    free.state_id = kFreeSpaceStateId;
    FieldGrid state = free;
    state.state_id = "pose x=2.01 y=0.24 theta=45";
    for (auto& s : state.samples)
        s *= ComplexSample{0.3, -0.2};
    return {free, state};
}

std::vector<char> slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace

TEST_CASE("round trip is bit exact") {
    TempFile file("roundtrip.blk");
    const DatasetHeader header = small_header();
    const auto grids = small_grids();
    write_dataset(file.path, header, grids);

    const Dataset ds = read_dataset(file.path);
    CHECK(ds.header.frequency_hz == header.frequency_hz);
    CHECK(ds.header.standoff_d == header.standoff_d);
    CHECK(ds.header.dims == header.dims);
    CHECK(ds.header.spacing == header.spacing);
    CHECK(ds.header.convention == kConventionExpPlusJwt);
    REQUIRE(ds.header.states.size() == 2);
    CHECK(ds.header.states[1].nominal_x == 2.0);
    CHECK(ds.header.states[1].theta_deg == 45.0);

    REQUIRE(ds.grids.size() == 2);
    for (std::size_t g = 0; g < 2; ++g)
        CHECK(std::memcmp(ds.grids[g].samples.data(), grids[g].samples.data(),
                          grids[g].samples.size() * sizeof(ComplexSample)) == 0);

    // writing the same content twice gives identical bytes
    TempFile file2("roundtrip2.blk");
    write_dataset(file2.path, header, grids);
    CHECK(slurp(file.path) == slurp(file2.path));
}

TEST_CASE("header/grid dim mismatch is rejected") {
    TempFile file("mismatch.blk");
    DatasetHeader header = small_header();
    header.dims = {1, 3, 2};
    const auto grids = small_grids();
    try {
        write_dataset(file.path, header, grids);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DimsMismatch);
    }
}

TEST_CASE("file size arithmetic") {
    TempFile file("size.blk");
    const DatasetHeader header = small_header();
    write_dataset(file.path, header, small_grids());
    CHECK(fs::file_size(file.path) == dataset_file_size(header));

    // the reference deployment: 36 states + free space, 50x180x90 points
    DatasetHeader big = small_header();
    big.dims = {50, 180, 90};
    big.states.resize(37);
    CHECK(dataset_file_size(big) ==
          dataset_header_size(37) + 37ull * 810000ull * 16ull);
}

TEST_CASE("corrupted and truncated files") {
    TempFile file("corrupt.blk");
    const DatasetHeader header = small_header();
    write_dataset(file.path, header, small_grids());

    SUBCASE("bad magic") {
        auto bytes = slurp(file.path);
        bytes[0] = 'X';
        std::ofstream(file.path, std::ios::binary | std::ios::trunc)
            .write(bytes.data(), std::streamsize(bytes.size()));
        try {
            read_dataset(file.path);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::BadMagic);
        }
    }

    SUBCASE("unsupported version") {
        auto bytes = slurp(file.path);
        bytes[4] = 9;
        std::ofstream(file.path, std::ios::binary | std::ios::trunc)
            .write(bytes.data(), std::streamsize(bytes.size()));
        try {
            read_dataset(file.path);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::UnsupportedVersion);
        }
    }

    SUBCASE("truncated sample section reports the offset") {
        auto bytes = slurp(file.path);
        bytes.resize(bytes.size() - 24);
        std::ofstream(file.path, std::ios::binary | std::ios::trunc)
            .write(bytes.data(), std::streamsize(bytes.size()));
        try {
            read_dataset(file.path);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::Truncated);
            CHECK(std::string(e.what()).find("byte") != std::string::npos);
        }
    }
}

TEST_CASE("missing file") {
    try {
        read_dataset("/nonexistent/nowhere.blk");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::IoError);
    }
}
