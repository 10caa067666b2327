#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rhg/geometry.hpp"
#include "rhg/sampler.hpp"

namespace rhg {

using Edge = std::pair<std::uint32_t, std::uint32_t>;

struct GeometricGraph {
    double R = 0.0;
    std::vector<PolarPoint> points;       // id order == angular order
    std::vector<Edge> edges;              // u < v, lexicographically sorted
    std::vector<std::size_t> offsets;     // CSR neighbor index
    std::vector<std::uint32_t> neighbors; // ascending within each vertex

    std::size_t num_vertices() const { return points.size(); }
    std::size_t num_edges() const { return edges.size(); }
    std::size_t degree(std::uint32_t v) const { return offsets[v + 1] - offsets[v]; }
    std::size_t max_degree() const;
    double mean_degree() const;
};

// The single edge rule both builders share: distance at most R, with a small
// symmetric tolerance so ties at exactly R count as edges.
inline bool edge_within(const PolarPoint& a, const PolarPoint& b, double R) {
    return point_distance(a, b, R) <= R + 1e-9;
}

// All-pairs ground truth.  Refuses more than max_vertices points.
GeometricGraph build_edges_naive(const VertexSample& sample,
                                 std::size_t max_vertices = 20000);

// Radial bands + angular windows; identical edge set to the naive builder.
// Requires points sorted by theta.  band_width is the band height in length
// units.
GeometricGraph build_edges_bucketed(const VertexSample& sample,
                                    unsigned workers = 1,
                                    double band_width = 1.0);

// Assembles a graph from an explicit edge list (file loads, synthetic tests).
GeometricGraph graph_from_edges(std::vector<PolarPoint> points,
                                std::vector<Edge> edges, double R);

} // namespace rhg
