#include "blockage/mom2d.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/LU>

namespace blockage {

namespace {

constexpr double kEulerGamma = 0.5772156649015329; // Euler-Mascheroni
constexpr double kEta0 = 376.730313668;            // vacuum impedance, ohm

// 4-point Gauss-Legendre rule on [-1, 1].
constexpr double kGaussNodes[4] = {-0.8611363115940526, -0.3399810435848563,
                                   0.3399810435848563, 0.8611363115940526};
constexpr double kGaussWeights[4] = {0.3478548451374538, 0.6521451548625461,
                                     0.6521451548625461, 0.3478548451374538};

ComplexSample hankel2_0(double x) {
    return {std::cyl_bessel_j(0.0, x), -std::cyl_neumann(0.0, x)};
}

ComplexSample hankel2_n(int n, double x) {
    return {std::cyl_bessel_j(double(n), x), -std::cyl_neumann(double(n), x)};
}

double distance(const Vec2& a, const Vec2& b) { return std::hypot(a.x - b.x, a.y - b.y); }

// Integral of H0^(2)(k |p - rho'|) over segment s, 4-point quadrature.
ComplexSample segment_kernel(const Segment& s, const Vec2& p, double k) {
    ComplexSample acc{};
    const double half = s.length / 2.0;
    for (int g = 0; g < 4; ++g) {
        const Vec2 q{s.midpoint.x + s.tangent.x * kGaussNodes[g] * half,
                     s.midpoint.y + s.tangent.y * kGaussNodes[g] * half};
        acc += kGaussWeights[g] * hankel2_0(k * distance(p, q));
    }
    return acc * half;
}

// Small-argument expansion of the self integral
// int_{-L/2}^{L/2} H0^(2)(k|t|) dt = L [1 - j (2/pi)(ln(kL/4) + gamma - 1)].
ComplexSample self_kernel(double length, double k) {
    const double im = -(2.0 / std::numbers::pi) * (std::log(k * length / 4.0) + kEulerGamma - 1.0);
    return ComplexSample(1.0, im) * length;
}

std::vector<Vec2> ellipse_vertices(double a, double b, const Vec2& center, double target_len) {
    // Oversample the parameter, then resample at equal arc length.
    std::size_t n_estimate = std::size_t(std::ceil(2.0 * std::numbers::pi * std::max(a, b) /
                                                   target_len));
    const std::size_t fine = std::max<std::size_t>(1024, 32 * n_estimate);

    std::vector<Vec2> pts(fine + 1);
    std::vector<double> cumulative(fine + 1, 0.0);
    for (std::size_t j = 0; j <= fine; ++j) {
        const double t = 2.0 * std::numbers::pi * double(j) / double(fine);
        pts[j] = {center.x + a * std::cos(t), center.y + b * std::sin(t)};
        if (j > 0)
            cumulative[j] = cumulative[j - 1] + distance(pts[j], pts[j - 1]);
    }
    const double perimeter = cumulative[fine];
    const auto n = std::size_t(std::ceil(perimeter / target_len));

    std::vector<Vec2> vertices(n);
    std::size_t j = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double s = perimeter * double(i) / double(n);
        while (j + 1 < fine && cumulative[j + 1] < s)
            ++j;
        const double span = cumulative[j + 1] - cumulative[j];
        const double f = span > 0.0 ? (s - cumulative[j]) / span : 0.0;
        vertices[i] = {pts[j].x + f * (pts[j + 1].x - pts[j].x),
                       pts[j].y + f * (pts[j + 1].y - pts[j].y)};
    }
    return vertices;
}

Contour contour_from_vertices(const std::vector<Vec2>& vertices) {
    Contour contour;
    contour.segments.reserve(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const Vec2& v1 = vertices[i];
        const Vec2& v2 = vertices[(i + 1) % vertices.size()];
        Segment s;
        s.length = distance(v1, v2);
        s.midpoint = {(v1.x + v2.x) / 2.0, (v1.y + v2.y) / 2.0};
        s.tangent = {(v2.x - v1.x) / s.length, (v2.y - v1.y) / s.length};
        contour.segments.push_back(s);
        contour.total_length += s.length;
    }
    return contour;
}

bool inside_contour(const Contour& contour, const Vec2& p) {
    // Ray cast against the midpoint polygon.
    bool inside = false;
    const auto& segs = contour.segments;
    for (std::size_t i = 0, j = segs.size() - 1; i < segs.size(); j = i++) {
        const Vec2& a = segs[i].midpoint;
        const Vec2& b = segs[j].midpoint;
        if ((a.y > p.y) != (b.y > p.y) &&
            p.x < (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x)
            inside = !inside;
    }
    return inside;
}

} // namespace

Contour discretize_contour(const ContourShape& shape, int segments_per_wavelength, double k,
                           Vec2 center) {
    if (segments_per_wavelength < 10)
        fail(ErrorCode::TooCoarse, "need at least 10 segments per wavelength");
    const double lambda = 2.0 * std::numbers::pi / k;
    const double target_len = lambda / double(segments_per_wavelength);

    std::vector<Vec2> vertices;
    if (const auto* circle = std::get_if<CircleShape>(&shape)) {
        if (!(circle->radius > 0.0))
            fail(ErrorCode::InvalidValue, "circle radius must be positive");
        const double perimeter = 2.0 * std::numbers::pi * circle->radius;
        const auto n = std::size_t(std::ceil(perimeter / target_len));
        vertices.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double t = 2.0 * std::numbers::pi * double(i) / double(n);
            vertices[i] = {center.x + circle->radius * std::cos(t),
                           center.y + circle->radius * std::sin(t)};
        }
    } else {
        const auto& ellipse = std::get<EllipseShape>(shape);
        if (!(ellipse.a > 0.0) || !(ellipse.b > 0.0))
            fail(ErrorCode::InvalidValue, "ellipse semi-axes must be positive");
        vertices = ellipse_vertices(ellipse.a, ellipse.b, center, target_len);
    }
    return contour_from_vertices(vertices);
}

ComplexSample incident_field_2d(const Vec2& source, const Vec2& point, double k) {
    const double d = distance(source, point);
    if (d <= 0.0)
        fail(ErrorCode::SingularPoint, "field requested at the line source");
    return hankel2_0(k * d);
}

ImpedanceSystem assemble(const Contour& contour, const Vec2& source, double k) {
    if (contour.segments.empty())
        fail(ErrorCode::InvalidValue, "empty contour");
    if (inside_contour(contour, source))
        fail(ErrorCode::InvalidValue, "line source must lie outside the contour");

    const auto n = Eigen::Index(contour.segments.size());
    const double coeff = kEta0 * k / 4.0;

    ImpedanceSystem system;
    system.matrix.resize(n, n);
    system.excitation.resize(n);
    for (Eigen::Index m = 0; m < n; ++m) {
        const Segment& obs = contour.segments[m];
        for (Eigen::Index j = 0; j < n; ++j) {
            const ComplexSample integral = (m == j)
                                               ? self_kernel(obs.length, k)
                                               : segment_kernel(contour.segments[j], obs.midpoint, k);
            system.matrix(m, j) = coeff * integral;
        }
        system.excitation(m) = incident_field_2d(source, obs.midpoint, k);
    }
    return system;
}

Eigen::VectorXcd solve(const ImpedanceSystem& system) {
    if (system.matrix.rows() != system.matrix.cols() ||
        system.matrix.rows() != system.excitation.size())
        fail(ErrorCode::DimsMismatch, "impedance system shape mismatch");

    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(system.matrix);
    const Eigen::VectorXd pivots = lu.matrixLU().diagonal().cwiseAbs();
    const double largest = pivots.maxCoeff();
    if (largest == 0.0 || pivots.minCoeff() < 1e-13 * largest)
        fail(ErrorCode::SingularMatrix,
             "impedance matrix is numerically singular (likely an internal resonance; "
             "perturb the wavenumber slightly)");
    return lu.solve(system.excitation);
}

Eigen::VectorXcd assemble_and_solve(const Contour& contour, const Vec2& source, double k) {
    return solve(assemble(contour, source, k));
}

ComplexSample scattered_field_2d(const Contour& contour, const Eigen::VectorXcd& currents,
                                 const Vec2& point, double k) {
    if (currents.size() != Eigen::Index(contour.segments.size()))
        fail(ErrorCode::DimsMismatch, "current vector does not match the contour");
    const double coeff = kEta0 * k / 4.0;
    ComplexSample acc{};
    for (Eigen::Index j = 0; j < currents.size(); ++j)
        acc += currents[j] * segment_kernel(contour.segments[j], point, k);
    return -coeff * acc;
}

ComplexSample total_field_2d(const Contour& contour, const Eigen::VectorXcd& currents,
                             const Vec2& point, const Vec2& source, double k) {
    for (const Segment& s : contour.segments) {
        // point-to-segment distance
        const double px = point.x - s.midpoint.x;
        const double py = point.y - s.midpoint.y;
        const double along =
            std::clamp(px * s.tangent.x + py * s.tangent.y, -s.length / 2.0, s.length / 2.0);
        const double dx = px - along * s.tangent.x;
        const double dy = py - along * s.tangent.y;
        if (std::hypot(dx, dy) < 0.25 * s.length)
            fail(ErrorCode::PointOnContour, "field point touches the contour");
    }
    return incident_field_2d(source, point, k) + scattered_field_2d(contour, currents, point, k);
}

ComplexSample cylinder_scattered_series(double radius, const Vec2& center, const Vec2& source,
                                        const Vec2& point, double k, int n_terms) {
    const double rho_s = distance(source, center);
    const double rho_p = distance(point, center);
    if (rho_s <= radius)
        fail(ErrorCode::InvalidValue, "series source must lie outside the cylinder");
    if (rho_p < radius)
        fail(ErrorCode::InvalidValue, "series field point must lie outside the cylinder");

    const double phi_s = std::atan2(source.y - center.y, source.x - center.x);
    const double phi_p = std::atan2(point.y - center.y, point.x - center.x);
    const double dphi = phi_p - phi_s;

    const double ka = k * radius;
    ComplexSample acc{};
    for (int n = 0; n <= n_terms; ++n) {
        const double jn_a = std::cyl_bessel_j(double(n), ka);
        const ComplexSample cn =
            jn_a / hankel2_n(n, ka) * hankel2_n(n, k * rho_s) * hankel2_n(n, k * rho_p);
        acc += (n == 0 ? 1.0 : 2.0 * std::cos(n * dphi)) * cn;
    }
    return -acc;
}

ComplexSample cylinder_total_series(double radius, const Vec2& center, const Vec2& source,
                                    const Vec2& point, double k, int n_terms) {
    return incident_field_2d(source, point, k) +
           cylinder_scattered_series(radius, center, source, point, k, n_terms);
}

ShadowCompareReport shadow_profile_compare(std::span<const double> mom_slice,
                                           std::span<const double> reference_slice) {
    if (mom_slice.size() != reference_slice.size() || mom_slice.empty())
        fail(ErrorCode::LengthMismatch, "attenuation slices must have equal, non-zero length");

    auto argmax = [](std::span<const double> v) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < v.size(); ++i)
            if (v[i] > v[best])
                best = i;
        return best;
    };

    ShadowCompareReport report;
    report.peak_offset_cells = int(argmax(mom_slice)) - int(argmax(reference_slice));
    double acc = 0.0;
    for (std::size_t i = 0; i < mom_slice.size(); ++i)
        acc += std::abs(mom_slice[i] - reference_slice[i]);
    report.mean_abs_diff_db = acc / double(mom_slice.size());
    return report;
}

} // namespace blockage
