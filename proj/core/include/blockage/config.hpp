#pragma once

#include <filesystem>
#include <istream>

#include "blockage/geometry.hpp"

namespace blockage {

/// Parses a line-oriented `key = value` scenario description. Blank lines
/// and lines starting with '#' are skipped. Recognized keys:
///   frequency_hz, standoff_d, n_surfaces, n_rows, n_cols,
///   spacing_over_lambda, body.kind (elliptical_cylinder |
///   rectangular_screen), body.height, body.width, body.thickness,
///   body.rel_permittivity, body.loss_tangent, body.mass_density
/// Omitted keys keep the default scenario values. Unknown keys fail fast
/// (UnknownKey); malformed lines raise MissingKey or InvalidValue.
SceneParams parse_scene_config(std::istream& in);

SceneParams load_scene_config(const std::filesystem::path& path);

} // namespace blockage
