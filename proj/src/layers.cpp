#include "rhg/layers.hpp"

#include <algorithm>
#include <cmath>

#include "rhg/errors.hpp"
#include "rhg/geometry.hpp"

namespace rhg {

std::size_t LayerDecomposition::layer_of_t(double t) const {
    if (!(t >= 0.0)) throw domain_error("depth must be non-negative");
    auto it = std::upper_bound(t_levels.begin(), t_levels.end(), t);
    std::size_t i = static_cast<std::size_t>(it - t_levels.begin());
    return i < t_levels.size() ? i : kAboveTop;
}

double LayerDecomposition::theta(std::size_t i, std::size_t j) const {
    return connection_angle_approx(t_levels.at(i), t_levels.at(j), R);
}

LayerDecomposition decompose_layers(const std::vector<PolarPoint>& points, double R,
                                    double alpha, const LayerOptions& opts) {
    if (!(alpha > 1.0)) throw domain_error("layer decomposition needs alpha > 1");
    const double log_r = std::log(R);
    if (!(log_r > 0.0)) throw domain_error("layer decomposition needs R > 1");
    const double base =
        opts.base_offset < 0.0 ? 4.0 * alpha / (alpha - 1.0) : opts.base_offset;
    if (!(base > 0.0) || !(opts.spacing > 0.0))
        throw domain_error("layer base offset and spacing must be positive");

    LayerDecomposition out;
    out.R = R;
    out.alpha = alpha;
    out.t_max = R / (2.0 * alpha);
    out.base_offset = base;
    out.spacing = opts.spacing;
    for (std::size_t i = 0;; ++i) {
        const double level = (base + opts.spacing * static_cast<double>(i)) * log_r;
        out.t_levels.push_back(level);
        if (level >= out.t_max) break;
    }

    out.layers.resize(out.t_levels.size());
    for (std::size_t v = 0; v < points.size(); ++v) {
        const std::size_t i = out.layer_of_t(points[v].t);
        if (i == LayerDecomposition::kAboveTop)
            out.above_top.push_back(static_cast<std::uint32_t>(v));
        else
            out.layers[i].push_back(static_cast<std::uint32_t>(v));
    }
    return out;
}

} // namespace rhg
