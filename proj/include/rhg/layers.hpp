#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "rhg/params.hpp"

namespace rhg {

struct LayerOptions {
    // negative means "derive the default", which is 4*alpha/(alpha-1)
    double base_offset = -1.0;
    double spacing = 3.0;
};

// partition of depths [0, t_top) into bands L_i = [t_{i-1}, t_i) with
// t_i = (base + spacing*i) * log R, stopping at the first level at or above
// t_max = R/(2*alpha); points at t >= t_top fall outside every band
struct LayerDecomposition {
    double R = 0.0;
    double alpha = 0.0;
    double t_max = 0.0;
    double base_offset = 0.0; // resolved, never the sentinel
    double spacing = 0.0;
    std::vector<double> t_levels; // t_levels[i] is the top of band i
    std::vector<std::vector<std::uint32_t>> layers; // member ids, angular order
    std::vector<std::uint32_t> above_top;           // ids with t >= last level

    static constexpr std::size_t kAboveTop = std::numeric_limits<std::size_t>::max();

    std::size_t i_max() const { return t_levels.size() - 1; }
    bool degenerate() const { return t_levels.size() == 1; }
    double t_top() const { return t_levels.back(); }
    // band index for a depth, or kAboveTop
    std::size_t layer_of_t(double t) const;
    // admissible angular half-width between the band tops i and j
    double theta(std::size_t i, std::size_t j) const;
};

LayerDecomposition decompose_layers(const std::vector<PolarPoint>& points, double R,
                                    double alpha, const LayerOptions& opts = {});

} // namespace rhg
