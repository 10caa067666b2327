#include "rhg/zones.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rhg/angular.hpp"
#include "rhg/components.hpp"
#include "rhg/errors.hpp"
#include "rhg/geometry.hpp"
#include "rhg/parallel.hpp"

namespace rhg {

namespace {

void require_zone_level(double t0, double R) {
    if (!(t0 >= 0.0) || !(2.0 * t0 < R))
        throw domain_error("zone level must satisfy 0 <= t0 < R/2");
}

} // namespace

bool zone_contains(double t0, double theta0, const PolarPoint& p, double R) {
    require_zone_level(t0, R);
    if (p.t > t0) return false;
    return circular_distance(p.theta, theta0) <= connection_angle_approx(p.t, p.t, R);
}

bool zone_is_empty(const GeometricGraph& g, double t0, double theta0) {
    require_zone_level(t0, g.R);
    // widths grow with depth, so the width at the level bounds the whole zone
    const double w = connection_angle_approx(t0, t0, g.R) + 1e-12;
    return visit_angular_window(
        g.points.size(), [&](std::size_t pos) { return g.points[pos].theta; }, theta0 - w,
        theta0 + w,
        [&](std::size_t pos) { return !zone_contains(t0, theta0, g.points[pos], g.R); });
}

ZoneSearchResult find_zone_right_of(const GeometricGraph& g, double t0, double anchor,
                                    double step, std::size_t j_cap) {
    if (!(step > 0.0)) throw domain_error("zone search step must be positive");
    ZoneSearchResult res;
    for (std::size_t j = 0; j <= j_cap; ++j) {
        const double center = wrap_angle(anchor + step * static_cast<double>(j));
        if (zone_is_empty(g, t0, center)) {
            res.found = true;
            res.j = j;
            res.theta_center = center;
            break;
        }
    }
    return res;
}

double zone_gap(double center_a, double center_b, double theta_ii) {
    return std::max(0.0, wrap_angle(center_b - center_a) - 2.0 * theta_ii);
}

double estimate_c(double t_level, const ModelParams& params, double target) {
    if (!(target > 0.0 && target < 1.0))
        throw parameter_error("c estimate target must be in (0, 1)");
    if (!(t_level >= 0.0)) throw domain_error("level must be non-negative");
    double sum = 0.0;
    const std::size_t top = static_cast<std::size_t>(std::ceil(t_level));
    for (std::size_t i = 1; i <= top; ++i)
        sum += std::exp(-(params.alpha - 1.0) * static_cast<double>(i));
    const double e_bound = 4.0 * params.nu * std::expm1(params.alpha) * sum;
    const double p_occupied = -std::expm1(-e_bound);
    if (!(p_occupied > 0.0)) return 0.0;
    const double ratio = std::log(target) / std::log(p_occupied);
    return std::max(0.0, (ratio - 1.0) / params.radius());
}

ZoneCatalog build_zone_catalog(const GeometricGraph& g, const LayerDecomposition& layers,
                               const ModelParams& params, double c,
                               double c_estimate_target, unsigned workers) {
    if (!(c > 0.0)) throw parameter_error("c must be positive");
    ZoneCatalog cat;
    cat.R = layers.R;
    cat.c = c;
    cat.base_offset = layers.base_offset;
    cat.spacing = layers.spacing;
    cat.degenerate = layers.degenerate();
    cat.c_estimate_target = c_estimate_target;
    cat.layers.resize(layers.t_levels.size());

    const double c_r = c * layers.R;
    struct Task {
        std::size_t i, k, cap;
        double anchor, step, t;
    };
    std::vector<Task> tasks;
    for (std::size_t i = 0; i < layers.t_levels.size(); ++i) {
        LayerZones& lz = cat.layers[i];
        lz.i = i;
        lz.t_level = layers.t_levels[i];
        lz.c_estimate = estimate_c(lz.t_level, params, c_estimate_target);
        if (!(2.0 * lz.t_level < layers.R)) {
            lz.diagnostic = "layer level at or above R/2, no zones exist";
            continue;
        }
        lz.theta_ii = layers.theta(i, i);
        lz.k_max = static_cast<std::size_t>(std::ceil(kTwoPi / (3.0 * c_r * lz.theta_ii)));
        if (lz.k_max == 0) lz.k_max = 1;
        lz.zones.resize(lz.k_max);
        const double step = 2.0 * lz.theta_ii;
        const std::size_t cap = static_cast<std::size_t>(std::ceil(kTwoPi / step));
        for (std::size_t k = 0; k < lz.k_max; ++k) {
            lz.zones[k].k = k;
            tasks.push_back({i, k, cap, 3.0 * c_r * static_cast<double>(k) * lz.theta_ii,
                             step, lz.t_level});
        }
    }

    std::vector<ZoneSearchResult> results(tasks.size());
    parallel_for(tasks.size(), workers, [&](std::size_t ti) {
        const Task& t = tasks[ti];
        results[ti] = find_zone_right_of(g, t.t, t.anchor, t.step, t.cap);
    });
    for (std::size_t ti = 0; ti < tasks.size(); ++ti) {
        ZoneInfo& z = cat.layers[tasks[ti].i].zones[tasks[ti].k];
        z.found = results[ti].found;
        z.j = results[ti].j;
        z.theta_center = results[ti].theta_center;
    }

    bool all_ok = true;
    for (LayerZones& lz : cat.layers) {
        if (!lz.diagnostic.empty()) {
            all_ok = false;
            continue;
        }
        bool missing = false, gap_bad = false;
        for (std::size_t k = 0; k < lz.k_max; ++k) {
            ZoneInfo& z = lz.zones[k];
            const ZoneInfo& nxt = lz.zones[(k + 1) % lz.k_max];
            if (z.found && nxt.found) {
                z.gap_to_next = zone_gap(z.theta_center, nxt.theta_center, lz.theta_ii);
                z.gap_ok = lz.k_max == 1 || (z.gap_to_next >= c_r * lz.theta_ii &&
                                             z.gap_to_next <= 5.0 * c_r * lz.theta_ii);
            } else {
                z.gap_to_next = 0.0;
                z.gap_ok = false;
            }
            if (!z.found) missing = true;
            if (z.found && nxt.found && !z.gap_ok) gap_bad = true;
        }
        lz.ok = !missing && !gap_bad;
        if (missing)
            lz.diagnostic = "no empty zone within a full turn of some anchor";
        else if (gap_bad)
            lz.diagnostic = "zone gap outside the admissible bracket";
        all_ok = all_ok && lz.ok;
    }
    cat.separation_event = all_ok;
    return cat;
}

int locate_region(const LayerZones& lz, const PolarPoint& p, double R) {
    if (!(p.t <= lz.t_level))
        throw contract_error("point lies above the layer level");
    int best = -2;
    double best_arc = std::numeric_limits<double>::infinity();
    for (const ZoneInfo& z : lz.zones) {
        if (!z.found) continue;
        if (zone_contains(lz.t_level, z.theta_center, p, R)) return -1;
        // the region index matches the zone bounding it counterclockwise
        const double arc = wrap_angle(z.theta_center - p.theta);
        if (arc < best_arc) {
            best_arc = arc;
            best = static_cast<int>(z.k);
        }
    }
    return best;
}

SeparationReport assert_separation(const GeometricGraph& g, const LayerDecomposition& layers,
                                   const ZoneCatalog& cat, std::size_t sample_cap) {
    if (!cat.separation_event)
        throw parameter_error("separation check requires the separation event to hold");
    (void)layers;
    SeparationReport rep;
    auto add_sample = [&](SeparationViolation v) {
        if (rep.samples.size() < sample_cap) rep.samples.push_back(std::move(v));
    };
    const std::size_t n = g.num_vertices();
    for (std::size_t i = 0; i < cat.layers.size(); ++i) {
        const LayerZones& lz = cat.layers[i];
        std::vector<int> region(n, -3); // -3: above the layer level
        for (std::size_t v = 0; v < n; ++v)
            if (g.points[v].t <= lz.t_level)
                region[v] = locate_region(lz, g.points[v], g.R);

        for (const Edge& e : g.edges) {
            const int ra = region[e.first], rb = region[e.second];
            if (ra >= 0 && rb >= 0 && ra != rb) {
                ++rep.n_edge_violations;
                add_sample({i, false, e.first, e.second, ra, rb, g.points[e.first],
                            g.points[e.second]});
            }
        }

        UnionFind uf(n);
        for (const Edge& e : g.edges)
            if (region[e.first] != -3 && region[e.second] != -3)
                uf.unite(e.first, e.second);
        std::vector<int> claim(n, -3);
        std::vector<std::uint32_t> claimant(n, 0);
        for (std::size_t v = 0; v < n; ++v) {
            if (region[v] < 0) continue; // above the level or inside a zone
            const std::uint32_t root = uf.find(static_cast<std::uint32_t>(v));
            if (claim[root] == -3) {
                claim[root] = region[v];
                claimant[root] = static_cast<std::uint32_t>(v);
            } else if (claim[root] != region[v]) {
                ++rep.n_component_violations;
                add_sample({i, true, claimant[root], static_cast<std::uint32_t>(v),
                            claim[root], region[v], g.points[claimant[root]], g.points[v]});
            }
        }
    }
    rep.ok = rep.n_edge_violations == 0 && rep.n_component_violations == 0;
    return rep;
}

} // namespace rhg
