#pragma once

#include <string>

#include "rhg/components.hpp"
#include "rhg/graph.hpp"

namespace rhg {

struct RenderOptions {
    double width = 1000.0;
    std::size_t max_vertices = 50000;
};

// static figure of a realization: points at Euclidean polar (r, theta) so the
// Euclidean distance from the center equals the hyperbolic radius, straight
// edges, solid circle at R, dashed circle at R/2, largest component accented
std::string render_svg(const GeometricGraph& g, const Components& comps,
                       const RenderOptions& opts = {});

} // namespace rhg
