#include "rhg/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "rhg/errors.hpp"
#include "rhg/geometry.hpp"
#include "rhg/rng.hpp"

namespace rhg {

VertexSample sample_vertices(const ModelParams& params, SampleMode mode,
                             std::uint64_t max_points) {
    params.validate();
    VertexSample out;
    out.params = params;
    out.mode = mode;
    out.R = params.radius();

    Rng rng(substream_seed(params.seed, "sample", 0));
    std::uint64_t count = 0;
    if (mode == SampleMode::poisson) {
        count = rng.poisson(params.n);
    } else {
        count = static_cast<std::uint64_t>(std::llround(params.n));
    }
    if (count > max_points)
        throw resource_error("sample of " + std::to_string(count) +
                             " points exceeds the cap of " + std::to_string(max_points));

    out.points.resize(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        // the boundary r = R is excluded from the support; r = 0 is fine
        double r = sample_radius(rng.uniform01(), params.alpha, out.R);
        while (!(r < out.R)) r = sample_radius(rng.uniform01(), params.alpha, out.R);
        const double theta = wrap_angle(kTwoPi * rng.uniform01());
        out.points[i] = PolarPoint{out.R - r, theta};
    }

    std::vector<std::uint64_t> order(count);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::uint64_t a, std::uint64_t b) {
        const PolarPoint& pa = out.points[a];
        const PolarPoint& pb = out.points[b];
        if (pa.theta != pb.theta) return pa.theta < pb.theta;
        if (pa.t != pb.t) return pa.t < pb.t;
        return a < b;
    });
    std::vector<PolarPoint> sorted(count);
    for (std::uint64_t i = 0; i < count; ++i) sorted[i] = out.points[order[i]];
    out.points = std::move(sorted);
    return out;
}

} // namespace rhg
