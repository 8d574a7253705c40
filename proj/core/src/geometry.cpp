#include "blockage/geometry.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "blockage/fields.hpp"

namespace blockage {

double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

double Scene::wavelength() const { return blockage::wavelength(frequency_hz); }

double Scene::wavenumber() const { return blockage::wavenumber(frequency_hz); }

namespace {

void require_positive(double value, const char* name) {
    if (!(value > 0.0) || !std::isfinite(value))
        fail(ErrorCode::InvalidValue, std::string(name) + " must be positive");
}

void validate_body(const BodyModel& body) {
    require_positive(body.height, "body.height");
    require_positive(body.width, "body.width");
    require_positive(body.thickness, "body.thickness");
    if (body.width < body.thickness)
        fail(ErrorCode::InvalidValue, "body.width must be >= body.thickness");
    require_positive(body.material.rel_permittivity, "body.rel_permittivity");
    require_positive(body.material.loss_tangent, "body.loss_tangent");
    require_positive(body.material.mass_density, "body.mass_density");
}

} // namespace

Scene build_scene(const SceneParams& params) {
    require_positive(params.frequency_hz, "frequency_hz");
    require_positive(params.standoff_d, "standoff_d");
    require_positive(params.spacing_over_lambda, "spacing_over_lambda");
    if (params.n_surfaces < 1 || params.n_rows < 1 || params.n_cols < 1)
        fail(ErrorCode::InvalidValue, "manifold counts must be >= 1");
    validate_body(params.body);

    Scene scene;
    scene.frequency_hz = params.frequency_hz;
    scene.standoff_d = params.standoff_d;
    scene.body = params.body;

    const double lambda = scene.wavelength();
    scene.manifold.n_surfaces = params.n_surfaces;
    scene.manifold.n_rows = params.n_rows;
    scene.manifold.n_cols = params.n_cols;
    scene.manifold.spacing = params.spacing_over_lambda * lambda;
    scene.manifold.first_surface_x = params.standoff_d;

    const double axis_norm = norm(scene.source.axis);
    if (std::abs(axis_norm - 1.0) > 1e-12)
        fail(ErrorCode::InvalidValue, "source axis must be a unit vector");

    // Each surface must enclose the silhouette of the default-oriented
    // body placed on the LOS (per-pose excursions may exit the grid).
    const double width = (scene.body.kind == BodyKind::EllipticalCylinder)
                             ? projected_width(scene.body, 0.0)
                             : scene.body.width;
    const double y_extent = scene.manifold.n_cols * scene.manifold.spacing;
    const double z_extent = scene.manifold.n_rows * scene.manifold.spacing;
    if (width > y_extent || scene.body.height > z_extent) {
        std::ostringstream msg;
        msg << "body silhouette " << width << " x " << scene.body.height
            << " m exceeds surface extent " << y_extent << " x " << z_extent << " m";
        fail(ErrorCode::ManifoldTooSmall, msg.str());
    }
    return scene;
}

std::vector<Vec3> array_points(const ArrayManifold& manifold) {
    std::vector<Vec3> points;
    points.reserve(manifold.count());
    for (std::uint32_t s = 0; s < manifold.n_surfaces; ++s)
        for (std::uint32_t r = 0; r < manifold.n_rows; ++r)
            for (std::uint32_t c = 0; c < manifold.n_cols; ++c)
                points.push_back(manifold.point(s, r, c));
    return points;
}

double projected_width(const BodyModel& body, double theta_deg) {
    if (body.kind != BodyKind::EllipticalCylinder)
        fail(ErrorCode::WrongBodyKind, "projected_width requires an elliptical body");
    const double theta = theta_deg * std::numbers::pi / 180.0;
    const double a = body.width / 2.0;
    const double b = body.thickness / 2.0;
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return 2.0 * std::sqrt(a * a * c * c + b * b * s * s);
}

SilhouetteRect silhouette(const BodyModel& body, const Pose& pose) {
    const double width = (body.kind == BodyKind::EllipticalCylinder)
                             ? projected_width(body, pose.theta_deg)
                             : body.width;
    SilhouetteRect rect;
    rect.plane_x = pose.x;
    rect.y_min = pose.y - width / 2.0;
    rect.y_max = pose.y + width / 2.0;
    rect.z_min = -body.height / 2.0;
    rect.z_max = body.height / 2.0;
    return rect;
}

} // namespace blockage
