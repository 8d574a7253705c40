#include "blockage/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

namespace blockage {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos)
        return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    double out = 0.0;
    const char* first = value.data();
    const char* last = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last)
        fail(ErrorCode::InvalidValue, key + ": not a number: '" + value + "'");
    return out;
}

std::uint32_t parse_count(const std::string& key, const std::string& value) {
    std::uint32_t out = 0;
    const char* first = value.data();
    const char* last = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last)
        fail(ErrorCode::InvalidValue, key + ": not a non-negative integer: '" + value + "'");
    return out;
}

} // namespace

SceneParams parse_scene_config(std::istream& in) {
    SceneParams params;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#')
            continue;

        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            fail(ErrorCode::InvalidValue,
                 "line " + std::to_string(line_no) + ": expected 'key = value'");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty())
            fail(ErrorCode::MissingKey, "line " + std::to_string(line_no) + ": empty key");
        if (value.empty())
            fail(ErrorCode::MissingKey,
                 "line " + std::to_string(line_no) + ": no value for '" + key + "'");

        if (key == "frequency_hz") {
            params.frequency_hz = parse_double(key, value);
        } else if (key == "standoff_d") {
            params.standoff_d = parse_double(key, value);
        } else if (key == "n_surfaces") {
            params.n_surfaces = parse_count(key, value);
        } else if (key == "n_rows") {
            params.n_rows = parse_count(key, value);
        } else if (key == "n_cols") {
            params.n_cols = parse_count(key, value);
        } else if (key == "spacing_over_lambda") {
            params.spacing_over_lambda = parse_double(key, value);
        } else if (key == "body.kind") {
            if (value == "elliptical_cylinder")
                params.body.kind = BodyKind::EllipticalCylinder;
            else if (value == "rectangular_screen")
                params.body.kind = BodyKind::RectangularScreen;
            else
                fail(ErrorCode::InvalidValue, "body.kind: unknown kind '" + value + "'");
        } else if (key == "body.height") {
            params.body.height = parse_double(key, value);
        } else if (key == "body.width") {
            params.body.width = parse_double(key, value);
        } else if (key == "body.thickness") {
            params.body.thickness = parse_double(key, value);
        } else if (key == "body.rel_permittivity") {
            params.body.material.rel_permittivity = parse_double(key, value);
        } else if (key == "body.loss_tangent") {
            params.body.material.loss_tangent = parse_double(key, value);
        } else if (key == "body.mass_density") {
            params.body.material.mass_density = parse_double(key, value);
        } else {
            fail(ErrorCode::UnknownKey,
                 "line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
    }
    return params;
}

SceneParams load_scene_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        fail(ErrorCode::IoError, "cannot open config " + path.string());
    return parse_scene_config(in);
}

} // namespace blockage
