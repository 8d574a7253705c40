#include "blockage/diffraction.hpp"

#include <atomic>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>
#include <vector>

namespace blockage {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Midpoint-rule grid over the screen at one refinement level. Weights
/// hold the incident field times the cell area, so a receiver evaluation
/// reduces to the propagation kernel and one pass over the grid.
struct QuadratureLevel {
    std::vector<double> y; // n_y midpoints
    std::vector<double> z; // n_z midpoints
    std::vector<double> w_re; // n_z * n_y, z-major
    std::vector<double> w_im;
};

class ScreenQuadrature {
public:
    ScreenQuadrature(const DipoleSource& source, const SilhouetteRect& screen, double k,
                     const QuadratureSpec& quad)
        : source_(source), screen_(screen), k_(k), initial_step_(quad.initial_step),
          levels_(quad.max_refinements + 1),
          once_(std::make_unique<std::once_flag[]>(quad.max_refinements + 1)) {}

    const QuadratureLevel& level(int l) const {
        std::call_once(once_[l], [this, l] { build(l); });
        return levels_[l];
    }

    double plane_x() const { return screen_.plane_x; }

private:
    void build(int l) const {
        const double step = initial_step_ / double(1 << l);
        const double width = screen_.width();
        const double height = screen_.height();
        const auto n_y = std::size_t(std::ceil(width / step));
        const auto n_z = std::size_t(std::ceil(height / step));
        const double dy = width / double(n_y);
        const double dz = height / double(n_z);
        const double cell_area = dy * dz;

        QuadratureLevel& lvl = levels_[l];
        lvl.y.resize(n_y);
        lvl.z.resize(n_z);
        for (std::size_t i = 0; i < n_y; ++i)
            lvl.y[i] = screen_.y_min + (double(i) + 0.5) * dy;
        for (std::size_t i = 0; i < n_z; ++i)
            lvl.z[i] = screen_.z_min + (double(i) + 0.5) * dz;

        lvl.w_re.resize(n_y * n_z);
        lvl.w_im.resize(n_y * n_z);
        for (std::size_t iz = 0; iz < n_z; ++iz) {
            for (std::size_t iy = 0; iy < n_y; ++iy) {
                const ComplexSample e =
                    free_space_field(source_, {screen_.plane_x, lvl.y[iy], lvl.z[iz]}, k_);
                lvl.w_re[iz * n_y + iy] = e.real() * cell_area;
                lvl.w_im[iz * n_y + iy] = e.imag() * cell_area;
            }
        }
    }

    DipoleSource source_;
    SilhouetteRect screen_;
    double k_;
    double initial_step_;
    mutable std::vector<QuadratureLevel> levels_;
    mutable std::unique_ptr<std::once_flag[]> once_;
};

} // namespace

// One z-row of the propagation kernel. The trig is done in separate
// passes over scratch buffers: sin and cos of a shared argument in one
// loop would be fused into scalar sincos, which defeats vectorization.
static void kernel_row(const double* __restrict dy2, const double* __restrict wr,
                       const double* __restrict wi, long n, double base, double k, double dxp,
                       double* __restrict t, double* __restrict amp, double* __restrict cbuf,
                       double* __restrict sbuf, double& acc_re, double& acc_im) {
    for (long i = 0; i < n; ++i) {
        const double r2 = std::sqrt(base + dy2[i]);
        t[i] = k * r2;
        // e^{-jkr2}/r2 * (1 + cos chi)/2 with cos chi = dxp/r2
        amp[i] = (r2 + dxp) / (2.0 * r2 * r2);
    }
    for (long i = 0; i < n; ++i)
        cbuf[i] = std::cos(t[i]);
    for (long i = 0; i < n; ++i)
        sbuf[i] = std::sin(t[i]);
    double row_re = 0.0;
    double row_im = 0.0;
    for (long i = 0; i < n; ++i) {
        row_re += amp[i] * (wr[i] * cbuf[i] + wi[i] * sbuf[i]);
        row_im += amp[i] * (wi[i] * cbuf[i] - wr[i] * sbuf[i]);
    }
    acc_re += row_re;
    acc_im += row_im;
}

// Kernel pass over one quadrature level. Summation order is fixed
// (z-major) regardless of threading.
static ComplexSample kernel_sum(const QuadratureLevel& lvl, const Vec3& point, double k,
                                double plane_x) {
    const double dxp = point.x - plane_x;
    const long n_y = long(lvl.y.size());
    const std::size_t n_z = lvl.z.size();

    std::vector<double> scratch(std::size_t(n_y) * 5);
    double* dy2 = scratch.data();
    double* t = dy2 + n_y;
    double* amp = t + n_y;
    double* cbuf = amp + n_y;
    double* sbuf = cbuf + n_y;
    for (long iy = 0; iy < n_y; ++iy) {
        const double d = lvl.y[std::size_t(iy)] - point.y;
        dy2[iy] = d * d;
    }

    double acc_re = 0.0;
    double acc_im = 0.0;
    for (std::size_t iz = 0; iz < n_z; ++iz) {
        const double dzp = lvl.z[iz] - point.z;
        const double base = dxp * dxp + dzp * dzp;
        kernel_row(dy2, lvl.w_re.data() + iz * std::size_t(n_y),
                   lvl.w_im.data() + iz * std::size_t(n_y), n_y, base, k, dxp, t, amp, cbuf, sbuf,
                   acc_re, acc_im);
    }
    // multiply by j/lambda = j k/(2 pi)
    const double scale = k / kTwoPi;
    return {-acc_im * scale, acc_re * scale};
}

QuadratureSpec default_quadrature(double lambda) {
    QuadratureSpec spec;
    spec.initial_step = lambda / 8.0;
    return spec;
}

namespace {

void validate_quadrature(const QuadratureSpec& quad, double lambda) {
    if (!(quad.initial_step > 0.0) || quad.initial_step > lambda / 8.0 + 1e-15)
        fail(ErrorCode::InvalidValue, "quadrature initial_step must be in (0, lambda/8]");
    if (!(quad.tolerance > 0.0) || !(quad.tolerance < 0.1))
        fail(ErrorCode::InvalidValue, "quadrature tolerance must be in (0, 0.1)");
    if (quad.max_refinements < 1)
        fail(ErrorCode::InvalidValue, "quadrature max_refinements must be >= 1");
}

BlockedField blocked_field_cached(const ScreenQuadrature& cache, const DipoleSource& source,
                                  const Vec3& point, double k, const QuadratureSpec& quad,
                                  double degenerate_area) {
    if (!(point.x > cache.plane_x()))
        fail(ErrorCode::GeometryError, "receiver must lie strictly behind the silhouette plane");

    const ComplexSample e0 = free_space_field(source, point, k);
    if (degenerate_area <= 0.0)
        return {e0, 0};

    const double scale = std::abs(e0) * quad.tolerance;
    ComplexSample prev = kernel_sum(cache.level(0), point, k, cache.plane_x());
    for (int l = 1; l <= quad.max_refinements; ++l) {
        const ComplexSample cur = kernel_sum(cache.level(l), point, k, cache.plane_x());
        if (std::abs(cur - prev) < scale)
            return {e0 - cur, l};
        prev = cur;
    }
    fail(ErrorCode::NoConvergence, "quadrature did not converge within max_refinements");
}

} // namespace

BlockedField blocked_field(const DipoleSource& source, const SilhouetteRect& screen,
                           const Vec3& point, double k, const QuadratureSpec& quad) {
    validate_quadrature(quad, kTwoPi / k);
    const ScreenQuadrature cache(source, screen, k, quad);
    return blocked_field_cached(cache, source, point, k, quad, screen.area());
}

BlockedField blocked_field(const Scene& scene, const Pose& pose, const Vec3& point,
                           const QuadratureSpec& quad) {
    return blocked_field(scene.source, silhouette(scene.body, pose), point, scene.wavenumber(),
                         quad);
}

namespace {

unsigned resolve_threads(unsigned threads) {
    if (threads == 0)
        threads = std::thread::hardware_concurrency();
    return threads == 0 ? 1 : threads;
}

std::string pose_state_id(const Pose& pose) {
    std::ostringstream id;
    id << "pose x=" << pose.x << " y=" << pose.y << " theta=" << pose.theta_deg;
    return id.str();
}

} // namespace

FieldGrid field_grid(const Scene& scene, const std::optional<Pose>& pose,
                     const QuadratureSpec& quad, unsigned threads) {
    const double k = scene.wavenumber();
    validate_quadrature(quad, scene.wavelength());

    FieldGrid grid;
    grid.dims = {scene.manifold.n_surfaces, scene.manifold.n_rows, scene.manifold.n_cols};
    grid.samples.resize(grid.dims.count());
    grid.state_id = pose ? pose_state_id(*pose) : kFreeSpaceStateId;

    std::optional<ScreenQuadrature> cache;
    double area = 0.0;
    if (pose) {
        const SilhouetteRect screen = silhouette(scene.body, *pose);
        area = screen.area();
        cache.emplace(scene.source, screen, k, quad);
    }

    const std::uint64_t total = grid.dims.count();
    const unsigned n_threads = std::min<std::uint64_t>(resolve_threads(threads), total);

    struct WorkerError {
        std::uint64_t index;
        ErrorCode code;
        std::string message;
    };
    std::mutex error_mutex;
    std::optional<WorkerError> first_error;

    auto worker = [&](std::uint64_t begin, std::uint64_t end) {
        const auto& m = scene.manifold;
        for (std::uint64_t i = begin; i < end; ++i) {
            const std::uint32_t c = std::uint32_t(i % m.n_cols);
            const std::uint32_t r = std::uint32_t((i / m.n_cols) % m.n_rows);
            const std::uint32_t s = std::uint32_t(i / (std::uint64_t(m.n_cols) * m.n_rows));
            const Vec3 p = m.point(s, r, c);
            try {
                if (cache) {
                    grid.samples[i] =
                        blocked_field_cached(*cache, scene.source, p, k, quad, area).value;
                } else {
                    grid.samples[i] = free_space_field(scene.source, p, k);
                }
            } catch (const Error& e) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error || i < first_error->index)
                    first_error = WorkerError{i, e.code(), e.message()};
                return;
            }
        }
    };

    if (n_threads <= 1) {
        worker(0, total);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        const std::uint64_t chunk = (total + n_threads - 1) / n_threads;
        for (unsigned t = 0; t < n_threads; ++t) {
            const std::uint64_t begin = std::uint64_t(t) * chunk;
            const std::uint64_t end = std::min(total, begin + chunk);
            if (begin < end)
                pool.emplace_back(worker, begin, end);
        }
        for (auto& th : pool)
            th.join();
    }

    if (first_error) {
        std::ostringstream msg;
        msg << first_error->message << " (point index " << first_error->index << ")";
        throw Error(first_error->code, msg.str());
    }
    return grid;
}

} // namespace blockage
