#include "rhg/cover.hpp"

#include <algorithm>
#include <cmath>

#include "rhg/angular.hpp"
#include "rhg/errors.hpp"
#include "rhg/geometry.hpp"

namespace rhg {

namespace {

// shared enumeration behind the neighborhood set and its counting twin; the
// window is padded for the binary search and the exact half-open predicate
// has the final say
template <class F>
void visit_neighborhood(std::uint32_t v, std::size_t i, std::size_t j,
                        const GeometricGraph& g, const LayerDecomposition& layers, F&& f) {
    if (j >= i) throw contract_error("neighborhood layers must satisfy j < i");
    if (i > layers.i_max()) throw contract_error("layer index out of range");
    if (layers.layer_of_t(g.points[v].t) != i)
        throw contract_error("vertex is not in the stated layer");
    const double th_ij = layers.theta(i, j);
    const double lo = g.points[v].theta - 2.0 * th_ij;
    const double width = 4.0 * th_ij;
    const auto& ids = layers.layers[j];
    visit_angular_window(
        ids.size(), [&](std::size_t pos) { return g.points[ids[pos]].theta; }, lo - 1e-12,
        lo + width + 1e-12, [&](std::size_t pos) {
            const std::uint32_t u = ids[pos];
            if (wrap_angle(g.points[u].theta - lo) < width) f(u);
            return true;
        });
}

std::uint32_t deepest_of(const std::vector<std::uint32_t>& members,
                         const std::vector<PolarPoint>& pts) {
    std::uint32_t best = members.front();
    for (std::uint32_t u : members)
        if (pts[u].t > pts[best].t) best = u;
    return best;
}

} // namespace

std::vector<std::uint32_t> theta_neighborhood(std::uint32_t v, std::size_t i, std::size_t j,
                                              const GeometricGraph& g,
                                              const LayerDecomposition& layers) {
    std::vector<std::uint32_t> out;
    visit_neighborhood(v, i, j, g, layers, [&](std::uint32_t u) { out.push_back(u); });
    std::sort(out.begin(), out.end());
    return out;
}

CoverBuilder::CoverBuilder(const GeometricGraph& g, const LayerDecomposition& layers,
                           const ZoneCatalog& cat)
    : g_(g), layers_(layers), cat_(cat), layer_of_(g.num_vertices()), memo_(g.num_vertices()) {
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
        layer_of_[v] = layers.layer_of_t(g.points[v].t);
}

const std::vector<std::uint32_t>& CoverBuilder::c_set(std::uint32_t v) {
    if (memo_[v]) return *memo_[v];
    const std::size_t i = layer_of_[v];
    if (i == LayerDecomposition::kAboveTop)
        throw contract_error("vertex above the top level has no reach set");
    auto acc = std::make_unique<std::vector<std::uint32_t>>();
    acc->push_back(v);
    for (std::size_t j = 0; j < i; ++j)
        visit_neighborhood(v, i, j, g_, layers_, [&](std::uint32_t u) {
            const auto& cu = c_set(u);
            acc->insert(acc->end(), cu.begin(), cu.end());
        });
    std::sort(acc->begin(), acc->end());
    acc->erase(std::unique(acc->begin(), acc->end()), acc->end());
    memo_[v] = std::move(acc);
    return *memo_[v];
}

const std::vector<std::uint32_t>& CoverBuilder::cell_cover(std::size_t i, std::size_t k) {
    if (!cat_.separation_event)
        throw parameter_error("covers require the separation event to hold");
    auto it = cells_.find({i, k});
    if (it != cells_.end()) return it->second;
    std::vector<std::uint32_t> acc;
    for (std::uint32_t u : layers_.layers.at(i)) {
        if (locate_region(cat_.layers[i], g_.points[u], g_.R) != static_cast<int>(k)) continue;
        const auto& cu = c_set(u);
        acc.insert(acc.end(), cu.begin(), cu.end());
    }
    std::sort(acc.begin(), acc.end());
    acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
    return cells_.emplace(std::make_pair(i, k), std::move(acc)).first->second;
}

CoverReport CoverBuilder::report_for_root(std::uint32_t v,
                                          const std::vector<std::uint32_t>& conn_sorted) {
    if (!cat_.separation_event)
        throw parameter_error("covers require the separation event to hold");
    const std::size_t i = layer_of_[v];
    if (i == LayerDecomposition::kAboveTop)
        throw contract_error("vertex above the top level has no cover");
    CoverReport rep;
    rep.v = v;
    rep.layer = i;
    rep.size_conn = conn_sorted.size();
    rep.is_max_t_root = deepest_of(conn_sorted, g_.points) == v;
    rep.size_C_v = c_set(v).size();
    rep.bound_rhs = std::exp(2.0 * layers_.t_levels[0] + layers_.t_levels[i] / 2.0);
    const int r = locate_region(cat_.layers[i], g_.points[v], g_.R);
    if (r < 0) {
        rep.unlocatable = true;
        return rep;
    }
    rep.region = r;
    const auto& cover = cell_cover(i, static_cast<std::size_t>(r));
    rep.size_cover = cover.size();
    rep.containment =
        std::includes(cover.begin(), cover.end(), conn_sorted.begin(), conn_sorted.end());
    return rep;
}

std::vector<std::uint32_t> build_C_v(std::uint32_t v, const GeometricGraph& g,
                                     const LayerDecomposition& layers) {
    static const ZoneCatalog empty_catalog;
    CoverBuilder b(g, layers, empty_catalog);
    return b.c_set(v);
}

CoverReport build_cover(std::uint32_t v, const GeometricGraph& g,
                        const LayerDecomposition& layers, const ZoneCatalog& cat) {
    CoverBuilder b(g, layers, cat);
    std::vector<std::uint32_t> conn{v};
    std::vector<char> seen(g.num_vertices(), 0);
    seen[v] = 1;
    for (std::size_t head = 0; head < conn.size(); ++head) {
        const std::uint32_t u = conn[head];
        for (std::size_t e = g.offsets[u]; e < g.offsets[u + 1]; ++e) {
            const std::uint32_t w = static_cast<std::uint32_t>(g.neighbors[e]);
            if (!seen[w]) {
                seen[w] = 1;
                conn.push_back(w);
            }
        }
    }
    std::sort(conn.begin(), conn.end());
    return b.report_for_root(v, conn);
}

InstanceCoverResult cover_max_t_roots(const GeometricGraph& g, const LayerDecomposition& layers,
                                      const ZoneCatalog& cat, const Components& comps) {
    InstanceCoverResult out;
    out.max_conn = comps.largest();
    CoverBuilder b(g, layers, cat);
    for (std::size_t c = 0; c < comps.count(); ++c) {
        const std::uint32_t root = comps.deepest[c];
        if (layers.layer_of_t(g.points[root].t) == LayerDecomposition::kAboveTop) {
            ++out.n_above_top_roots;
            continue;
        }
        std::vector<std::uint32_t> conn(comps.members.begin() + comps.member_offsets[c],
                                        comps.members.begin() + comps.member_offsets[c + 1]);
        CoverReport rep = b.report_for_root(root, conn);
        out.max_conn_reported = std::max(out.max_conn_reported, rep.size_conn);
        out.max_cover = std::max(out.max_cover, rep.size_cover);
        out.reports.push_back(rep);
    }
    return out;
}

ConcentrationVerdict check_concentration(const GeometricGraph& g,
                                         const LayerDecomposition& layers,
                                         const ModelParams& params) {
    ConcentrationVerdict out;
    for (std::size_t i = 1; i < layers.t_levels.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            const double th_ij = layers.theta(i, j);
            const double lo_t = j == 0 ? 0.0 : layers.t_levels[j - 1];
            const double hi_t = layers.t_levels[j];
            const double mass = ball_measure(layers.R - lo_t, layers.R, params.alpha) -
                                ball_measure(layers.R - hi_t, layers.R, params.alpha);
            const double expected = 4.0 * th_ij * params.n * mass;
            const double allowance = 4.0 * std::max(8.0 * layers.R, expected);
            for (std::uint32_t v : layers.layers[i]) {
                std::size_t count = 0;
                visit_neighborhood(v, i, j, g, layers, [&](std::uint32_t) { ++count; });
                const double ratio = static_cast<double>(count) / allowance;
                if (ratio > out.max_ratio) {
                    out.max_ratio = ratio;
                    out.worst_i = i;
                    out.worst_j = j;
                    out.worst_v = v;
                    out.worst_count = count;
                    out.worst_allowance = allowance;
                }
            }
        }
    }
    out.pass = out.max_ratio <= 1.0;
    return out;
}

} // namespace rhg
