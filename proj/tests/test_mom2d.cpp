#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "blockage/diffraction.hpp"
#include "blockage/fields.hpp"
#include "blockage/mom2d.hpp"

using namespace blockage;

namespace {

const double kFreq = 2.4868e9;
const double kK = wavenumber(kFreq);
const double kLambda = wavelength(kFreq);

double rms_error_vs_series(int segments_per_lambda, double radius) {
    const Contour contour = discretize_contour(CircleShape{radius}, segments_per_lambda, kK);
    const Vec2 source{-5.0 * kLambda, 0.0};
    const Eigen::VectorXcd currents = assemble_and_solve(contour, source, kK);

    double num = 0.0;
    double den = 0.0;
    for (int i = 0; i < 360; ++i) {
        const double phi = 2.0 * std::numbers::pi * double(i) / 360.0;
        const Vec2 p{5.0 * kLambda * std::cos(phi), 5.0 * kLambda * std::sin(phi)};
        const ComplexSample mom = scattered_field_2d(contour, currents, p, kK);
        const ComplexSample series = cylinder_scattered_series(radius, {0, 0}, source, p, kK);
        num += std::norm(mom - series);
        den += std::norm(series);
    }
    return std::sqrt(num / den);
}

} // namespace

TEST_CASE("contour discretization") {
    const Contour circle = discretize_contour(CircleShape{kLambda}, 20, kK);
    CHECK(circle.segments.size() == 126); // ceil(2 pi lambda / (lambda/20))
    CHECK(circle.total_length ==
          doctest::Approx(2.0 * std::numbers::pi * kLambda).epsilon(1e-3));
    double closure_x = 0.0;
    double closure_y = 0.0;
    for (const Segment& s : circle.segments) {
        CHECK(s.length <= kLambda / 10.0 + 1e-12);
        closure_x += s.length * s.tangent.x;
        closure_y += s.length * s.tangent.y;
    }
    CHECK(std::abs(closure_x) < 1e-12 * circle.total_length);
    CHECK(std::abs(closure_y) < 1e-12 * circle.total_length);

    // degenerate ellipse equals the circle
    const Contour ellipse = discretize_contour(EllipseShape{kLambda, kLambda}, 20, kK);
    REQUIRE(ellipse.segments.size() == circle.segments.size());
    for (std::size_t i = 0; i < circle.segments.size(); ++i) {
        CHECK(std::abs(ellipse.segments[i].midpoint.x - circle.segments[i].midpoint.x) <= 1e-12);
        CHECK(std::abs(ellipse.segments[i].midpoint.y - circle.segments[i].midpoint.y) <= 1e-12);
    }

    CHECK_THROWS_AS(discretize_contour(CircleShape{kLambda}, 2, kK), Error);
    try {
        discretize_contour(CircleShape{kLambda}, 2, kK);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TooCoarse);
    }
}

TEST_CASE("solve leaves a small residual") {
    const Contour contour = discretize_contour(CircleShape{kLambda}, 20, kK);
    const Vec2 source{-5.0 * kLambda, 0.0};
    const ImpedanceSystem system = assemble(contour, source, kK);
    const Eigen::VectorXcd currents = solve(system);
    const double residual =
        (system.matrix * currents - system.excitation).norm() / system.excitation.norm();
    CHECK(residual < 1e-10);
}

TEST_CASE("scattered field matches the harmonic series") {
    const double rms20 = rms_error_vs_series(20, kLambda);
    CHECK(rms20 < 0.01);
    const double rms40 = rms_error_vs_series(40, kLambda);
    CHECK(rms40 < rms20); // refinement strictly improves
}

TEST_CASE("sub-resonant cylinder scatters weakly") {
    // Rayleigh regime via the series reference
    const double radius = kLambda / 100.0;
    const Vec2 source{-5.0 * kLambda, 0.0};
    const Vec2 p{5.0 * kLambda, 0.0}; // deep shadow side
    const ComplexSample scat = cylinder_scattered_series(radius, {0, 0}, source, p, kK);
    const ComplexSample inc = incident_field_2d(source, p, kK);
    CHECK(std::abs(scat) / std::abs(inc) < 0.2);
}

TEST_CASE("total field vanishes inside the conductor") {
    const Contour contour = discretize_contour(CircleShape{kLambda}, 20, kK);
    const Vec2 source{-5.0 * kLambda, 0.0};
    const Eigen::VectorXcd currents = assemble_and_solve(contour, source, kK);

    std::mt19937 rng(1234);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const double rho = 0.8 * kLambda * std::sqrt(u(rng));
        const double phi = 2.0 * std::numbers::pi * u(rng);
        const Vec2 p{rho * std::cos(phi), rho * std::sin(phi)};
        const ComplexSample total = total_field_2d(contour, currents, p, source, kK);
        const ComplexSample inc = incident_field_2d(source, p, kK);
        CHECK(std::abs(total) < 0.01 * std::abs(inc));
    }
}

TEST_CASE("shadow zone sits behind the cylinder") {
    const Contour contour = discretize_contour(CircleShape{kLambda}, 20, kK);
    const Vec2 source{-5.0 * kLambda, 0.0};
    const Eigen::VectorXcd currents = assemble_and_solve(contour, source, kK);

    auto attenuation = [&](const Vec2& p) {
        const ComplexSample total = total_field_2d(contour, currents, p, source, kK);
        const ComplexSample inc = incident_field_2d(source, p, kK);
        return -20.0 * std::log10(std::abs(total) / std::abs(inc));
    };
    const double behind = attenuation({5.0 * kLambda, 0.0});
    const double side = attenuation({0.0, 5.0 * kLambda});
    CHECK(behind > side);
}

TEST_CASE("exterior points agree with the series") {
    const Contour contour = discretize_contour(CircleShape{kLambda}, 20, kK);
    const Vec2 source{-5.0 * kLambda, 0.0};
    const Eigen::VectorXcd currents = assemble_and_solve(contour, source, kK);

    for (const Vec2& p : {Vec2{3.0 * kLambda, kLambda}, Vec2{-2.0 * kLambda, 4.0 * kLambda},
                          Vec2{6.0 * kLambda, -0.5 * kLambda}}) {
        const ComplexSample mom = scattered_field_2d(contour, currents, p, kK);
        const ComplexSample series = cylinder_scattered_series(kLambda, {0, 0}, source, p, kK);
        CHECK(std::abs(mom - series) < 0.01 * std::abs(series));
    }
}

TEST_CASE("error paths") {
    const Contour contour = discretize_contour(CircleShape{kLambda}, 20, kK);
    const Vec2 source{-5.0 * kLambda, 0.0};
    const Eigen::VectorXcd currents = assemble_and_solve(contour, source, kK);

    // field point on the contour
    try {
        total_field_2d(contour, currents, contour.segments[7].midpoint, source, kK);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::PointOnContour);
    }

    // source inside the contour
    CHECK_THROWS_AS(assemble(contour, Vec2{0.1 * kLambda, 0.0}, kK), Error);

    // exactly singular system
    ImpedanceSystem singular;
    singular.matrix = Eigen::MatrixXcd::Ones(3, 3);
    singular.excitation = Eigen::VectorXcd::Ones(3);
    try {
        solve(singular);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SingularMatrix);
    }
}

TEST_CASE("shadow profile comparison") {
    const std::vector<double> a{0, 1, 5, 2, 0};
    ShadowCompareReport r = shadow_profile_compare(a, a);
    CHECK(r.peak_offset_cells == 0);
    CHECK(r.mean_abs_diff_db == 0.0);

    const std::vector<double> shifted{0, 0, 1, 5, 2}; // peak one cell later
    r = shadow_profile_compare(shifted, a);
    CHECK(r.peak_offset_cells == 1);

    const std::vector<double> shorter{0, 1};
    CHECK_THROWS_AS(shadow_profile_compare(shorter, a), Error);
}

TEST_CASE("cross-model shadow slice placement") {
    // 2D cross-section of the default body at z = 0 against the
    // screen-model slice along the same receivers
    const double spacing = 2.0 * kLambda / 10.0;
    const int cols = 31;
    const Vec2 center{2.0, 0.0};
    const Contour contour =
        discretize_contour(EllipseShape{0.16, 0.26}, 20, kK, center);
    const Vec2 source{0.0, 0.0};
    const Eigen::VectorXcd currents = assemble_and_solve(contour, source, kK);

    std::vector<double> mom(cols);
    for (int c = 0; c < cols; ++c) {
        const double y = (c - (cols - 1) / 2.0) * spacing;
        const Vec2 p{4.0, y};
        const ComplexSample total = total_field_2d(contour, currents, p, source, kK);
        const ComplexSample inc = incident_field_2d(source, p, kK);
        mom[std::size_t(c)] = -20.0 * std::log10(std::abs(total) / std::abs(inc));
    }

    Scene scene;
    scene.frequency_hz = kFreq;
    scene.standoff_d = 4.0;
    scene.manifold = ArrayManifold{1, 1, cols, spacing, 4.0};
    QuadratureSpec quad = default_quadrature(kLambda);
    const FieldGrid blocked = field_grid(scene, Pose{2, 0, 0}, quad);
    const FieldGrid free = field_grid(scene, std::nullopt, quad);
    std::vector<double> screen(cols);
    for (int c = 0; c < cols; ++c)
        screen[std::size_t(c)] =
            -20.0 * std::log10(std::abs(blocked.samples[std::size_t(c)]) /
                               std::abs(free.samples[std::size_t(c)]));

    const ShadowCompareReport report = shadow_profile_compare(mom, screen);
    CHECK(std::abs(report.peak_offset_cells) <= 1);
    CHECK(report.mean_abs_diff_db >= 0.0);
}
