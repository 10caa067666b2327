#pragma once

#include <cstdint>
#include <vector>

#include "rhg/params.hpp"

namespace rhg {

enum class SampleMode { poisson, fixed };

// Vertex ids are positions in `points`, which is sorted by (theta, t), so id
// order and angular order coincide.  Downstream angular searches rely on this.
struct VertexSample {
    ModelParams params;
    SampleMode mode = SampleMode::poisson;
    double R = 0.0;
    std::vector<PolarPoint> points;
};

// Draws the vertex set: N ~ Poisson(n) points in poisson mode, round(n) in
// fixed mode, each with theta uniform and radius from the model's radial law.
// Throws resource_error when the realized count exceeds max_points.
VertexSample sample_vertices(const ModelParams& params, SampleMode mode,
                             std::uint64_t max_points = 100000000);

} // namespace rhg
