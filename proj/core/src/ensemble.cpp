#include "blockage/ensemble.hpp"

namespace blockage {

std::vector<MicroMove> micro_moves(double lambda) {
    if (!(lambda > 0.0))
        fail(ErrorCode::InvalidValue, "lambda must be positive");
    const double q = lambda / 4.0;
    const double offsets[] = {-q, 0.0, q};
    const double headings[] = {0.0, 45.0, 90.0, 135.0};

    std::vector<MicroMove> moves;
    moves.reserve(36);
    for (double dx : offsets)
        for (double dy : offsets)
            for (double theta : headings)
                moves.push_back({dx, dy, theta});
    return moves;
}

std::vector<Pose> microstates(const Pose& nominal, double lambda) {
    std::vector<Pose> states;
    states.reserve(36);
    for (const MicroMove& m : micro_moves(lambda))
        states.push_back({nominal.x + m.dx, nominal.y + m.dy, m.theta_deg});
    return states;
}

std::vector<double> uniform_weights(std::size_t n) {
    if (n == 0)
        fail(ErrorCode::ZeroStates, "cannot weight an empty state set");
    std::vector<double> weights(n, 1.0 / double(n));
    double partial = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i)
        partial += weights[i];
    weights[n - 1] = 1.0 - partial; // re-establish an exact unit sum
    return weights;
}

std::array<Pose, 3> nominal_positions() {
    return {{{2.0, 0.0, 0.0}, {2.0, 0.25, 0.0}, {2.0, 0.50, 0.0}}};
}

} // namespace blockage
