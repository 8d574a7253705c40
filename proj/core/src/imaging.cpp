#include "blockage/imaging.hpp"

#include <cmath>

namespace blockage {

double attenuation_db(ComplexSample e, ComplexSample e0) {
    const double ref = std::abs(e0);
    if (ref == 0.0)
        fail(ErrorCode::ZeroReference, "free-space reference field is zero");
    const double mag = std::abs(e);
    if (mag == 0.0)
        return kAttenuationCapDb;
    const double ratio = mag / ref;
    const double db = -20.0 * std::log10(ratio);
    return db > kAttenuationCapDb ? kAttenuationCapDb : db;
}

AttenuationMap attenuation_map(const FieldGrid& state, const FieldGrid& free_space,
                               std::uint32_t surface) {
    if (!(state.dims == free_space.dims))
        fail(ErrorCode::DimsMismatch, "state and free-space grids disagree in dims");
    if (surface >= state.dims.n_surfaces)
        fail(ErrorCode::OutOfRange, "surface index out of range");

    AttenuationMap map;
    map.n_rows = state.dims.n_rows;
    map.n_cols = state.dims.n_cols;
    map.kind = MapKind::SingleState;
    map.values.resize(std::size_t(map.n_rows) * map.n_cols);
    for (std::uint32_t r = 0; r < map.n_rows; ++r)
        for (std::uint32_t c = 0; c < map.n_cols; ++c)
            map.at(r, c) = attenuation_db(state.at(surface, r, c), free_space.at(surface, r, c));
    return map;
}

namespace {

void check_stack(std::span<const AttenuationMap> stack, std::span<const double> weights) {
    if (stack.empty())
        fail(ErrorCode::DimsMismatch, "empty attenuation stack");
    for (const AttenuationMap& m : stack)
        if (m.n_rows != stack[0].n_rows || m.n_cols != stack[0].n_cols)
            fail(ErrorCode::DimsMismatch, "attenuation stack has mixed dims");
    if (weights.size() != stack.size())
        fail(ErrorCode::BadWeights, "weight count does not match state count");
    double sum = 0.0;
    for (double w : weights) {
        if (w < 0.0)
            fail(ErrorCode::BadWeights, "negative weight");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        fail(ErrorCode::BadWeights, "weights do not sum to 1");
}

} // namespace

AttenuationMap mean_map(std::span<const AttenuationMap> stack, std::span<const double> weights) {
    check_stack(stack, weights);
    AttenuationMap mean;
    mean.n_rows = stack[0].n_rows;
    mean.n_cols = stack[0].n_cols;
    mean.kind = MapKind::Mean;
    mean.values.assign(std::size_t(mean.n_rows) * mean.n_cols, 0.0);
    for (std::size_t s = 0; s < stack.size(); ++s)
        for (std::size_t i = 0; i < mean.values.size(); ++i)
            mean.values[i] += weights[s] * stack[s].values[i];
    return mean;
}

AttenuationMap std_map(std::span<const AttenuationMap> stack, const AttenuationMap& mean,
                       std::span<const double> weights) {
    check_stack(stack, weights);
    if (mean.n_rows != stack[0].n_rows || mean.n_cols != stack[0].n_cols)
        fail(ErrorCode::DimsMismatch, "mean map dims do not match the stack");

    AttenuationMap out;
    out.n_rows = mean.n_rows;
    out.n_cols = mean.n_cols;
    out.kind = MapKind::Std;
    out.values.assign(mean.values.size(), 0.0);
    for (std::size_t s = 0; s < stack.size(); ++s)
        for (std::size_t i = 0; i < out.values.size(); ++i) {
            const double d = stack[s].values[i] - mean.values[i];
            out.values[i] += weights[s] * d * d;
        }
    for (double& v : out.values)
        v = std::sqrt(v < 0.0 ? 0.0 : v);
    return out;
}

} // namespace blockage
