#include "rhg/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rhg/errors.hpp"
#include "rhg/parallel.hpp"

namespace rhg {

namespace {

void build_csr(GeometricGraph& g) {
    const std::size_t n = g.points.size();
    g.offsets.assign(n + 1, 0);
    for (const Edge& e : g.edges) {
        ++g.offsets[e.first + 1];
        ++g.offsets[e.second + 1];
    }
    for (std::size_t i = 0; i < n; ++i) g.offsets[i + 1] += g.offsets[i];
    g.neighbors.resize(2 * g.edges.size());
    std::vector<std::size_t> cursor(g.offsets.begin(), g.offsets.end() - 1);
    // edges are (u < v) in lexicographic order, so both adjacency sides come
    // out ascending
    for (const Edge& e : g.edges) {
        g.neighbors[cursor[e.first]++] = e.second;
        g.neighbors[cursor[e.second]++] = e.first;
    }
}

void finalize_edges(GeometricGraph& g) {
    std::sort(g.edges.begin(), g.edges.end());
    for (std::size_t i = 1; i < g.edges.size(); ++i)
        if (g.edges[i] == g.edges[i - 1])
            throw contract_error("duplicate edge produced by the builder");
    build_csr(g);
}

} // namespace

std::size_t GeometricGraph::max_degree() const {
    std::size_t best = 0;
    for (std::size_t v = 0; v + 1 < offsets.size(); ++v)
        best = std::max(best, offsets[v + 1] - offsets[v]);
    return best;
}

double GeometricGraph::mean_degree() const {
    if (points.empty()) return 0.0;
    return 2.0 * static_cast<double>(edges.size()) / static_cast<double>(points.size());
}

GeometricGraph build_edges_naive(const VertexSample& sample, std::size_t max_vertices) {
    if (sample.points.size() > max_vertices)
        throw resource_error("naive builder capped at " + std::to_string(max_vertices) +
                             " vertices; use the bucketed builder");
    GeometricGraph g;
    g.R = sample.R;
    g.points = sample.points;
    const std::size_t n = g.points.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (edge_within(g.points[i], g.points[j], g.R))
                g.edges.emplace_back(static_cast<std::uint32_t>(i),
                                     static_cast<std::uint32_t>(j));
    finalize_edges(g);
    return g;
}

GeometricGraph build_edges_bucketed(const VertexSample& sample, unsigned workers,
                                    double band_width) {
    if (!(band_width > 0.0))
        throw domain_error("band_width must be positive");
    GeometricGraph g;
    g.R = sample.R;
    g.points = sample.points;
    const std::size_t n = g.points.size();
    for (std::size_t i = 1; i < n; ++i)
        if (g.points[i].theta < g.points[i - 1].theta)
            throw contract_error("bucketed builder requires points sorted by theta");
    if (n == 0) {
        finalize_edges(g);
        return g;
    }

    // radial bands of height band_width, each keeping angular order
    const std::size_t n_bands =
        static_cast<std::size_t>(g.R / band_width) + 1;
    std::vector<std::vector<std::uint32_t>> bands(n_bands);
    std::vector<double> band_max_t(n_bands, 0.0);
    for (std::size_t v = 0; v < n; ++v) {
        std::size_t b = static_cast<std::size_t>(g.points[v].t / band_width);
        if (b >= n_bands) b = n_bands - 1;
        bands[b].push_back(static_cast<std::uint32_t>(v));
        band_max_t[b] = std::max(band_max_t[b], g.points[v].t);
    }
    std::vector<std::vector<double>> band_thetas(n_bands);
    for (std::size_t b = 0; b < n_bands; ++b) {
        band_thetas[b].reserve(bands[b].size());
        for (std::uint32_t v : bands[b]) band_thetas[b].push_back(g.points[v].theta);
    }

    // the window at the deepest pair of a band pair is a superset of any
    // admissible angular separation inside it; the threshold gets a little
    // extra slack to stay on the safe side of the edge-rule tolerance
    struct Task {
        std::size_t a, b;
        double window;
    };
    std::vector<Task> tasks;
    for (std::size_t a = 0; a < n_bands; ++a) {
        if (bands[a].empty()) continue;
        for (std::size_t b = a; b < n_bands; ++b) {
            if (bands[b].empty()) continue;
            const double w = connection_angle_exact(g.R - band_max_t[a],
                                                    g.R - band_max_t[b], g.R + 1e-6);
            if (w == 0.0) continue;
            tasks.push_back({a, b, w + 1e-12});
        }
    }

    std::vector<std::vector<Edge>> slots(tasks.size());
    parallel_for(tasks.size(), workers, [&](std::size_t ti) {
        const Task& task = tasks[ti];
        std::vector<Edge>& out = slots[ti];
        const auto& ids_a = bands[task.a];
        const auto& ids_b = bands[task.b];
        const auto& th_b = band_thetas[task.b];
        auto try_edge = [&](std::uint32_t u, std::uint32_t v) {
            if (edge_within(g.points[u], g.points[v], g.R))
                out.emplace_back(std::min(u, v), std::max(u, v));
        };
        if (task.window >= kPi) {
            if (task.a == task.b) {
                for (std::size_t i = 0; i < ids_a.size(); ++i)
                    for (std::size_t j = i + 1; j < ids_a.size(); ++j)
                        try_edge(ids_a[i], ids_a[j]);
            } else {
                for (std::uint32_t u : ids_a)
                    for (std::uint32_t v : ids_b) try_edge(u, v);
            }
            return;
        }
        if (task.a == task.b) {
            // forward circular scan; each unordered pair shows up once
            const std::size_t m = ids_a.size();
            const auto& th = band_thetas[task.a];
            for (std::size_t p = 0; p < m; ++p) {
                for (std::size_t step = 1; step < m; ++step) {
                    const std::size_t q = (p + step) % m;
                    double diff = th[q] - th[p];
                    if (diff < 0.0) diff += kTwoPi;
                    if (diff > task.window) break;
                    try_edge(ids_a[p], ids_a[q]);
                }
            }
            return;
        }
        auto scan_range = [&](std::uint32_t u, double lo, double hi) {
            auto first = std::lower_bound(th_b.begin(), th_b.end(), lo);
            auto last = std::upper_bound(th_b.begin(), th_b.end(), hi);
            for (auto it = first; it != last; ++it)
                try_edge(u, ids_b[static_cast<std::size_t>(it - th_b.begin())]);
        };
        for (std::uint32_t u : ids_a) {
            const double lo = g.points[u].theta - task.window;
            const double hi = g.points[u].theta + task.window;
            if (lo < 0.0) {
                scan_range(u, lo + kTwoPi, kTwoPi);
                scan_range(u, 0.0, hi);
            } else if (hi >= kTwoPi) {
                scan_range(u, lo, kTwoPi);
                scan_range(u, 0.0, hi - kTwoPi);
            } else {
                scan_range(u, lo, hi);
            }
        }
    });

    std::size_t total = 0;
    for (const auto& s : slots) total += s.size();
    g.edges.reserve(total);
    for (auto& s : slots) g.edges.insert(g.edges.end(), s.begin(), s.end());
    finalize_edges(g);
    return g;
}

GeometricGraph graph_from_edges(std::vector<PolarPoint> points, std::vector<Edge> edges,
                                double R) {
    GeometricGraph g;
    g.R = R;
    g.points = std::move(points);
    g.edges = std::move(edges);
    const std::size_t n = g.points.size();
    for (Edge& e : g.edges) {
        if (e.first > e.second) std::swap(e.first, e.second);
        if (e.first == e.second)
            throw parameter_error("self-loop in edge list");
        if (e.second >= n)
            throw parameter_error("edge references unknown vertex id " +
                                  std::to_string(e.second));
    }
    std::sort(g.edges.begin(), g.edges.end());
    for (std::size_t i = 1; i < g.edges.size(); ++i)
        if (g.edges[i] == g.edges[i - 1])
            throw parameter_error("duplicate edge in edge list");
    build_csr(g);
    return g;
}

} // namespace rhg
