#include "rhg/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "rhg/errors.hpp"
#include "rhg/parallel.hpp"
#include "rhg/rng.hpp"
#include "rhg/sampler.hpp"
#include "rhg/zones.hpp"

namespace rhg {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

std::vector<ReplicateResult> run_cell(const ModelParams& base, std::size_t seeds,
                                      std::uint64_t master, std::string_view tag,
                                      std::uint64_t base_index, unsigned workers) {
    std::vector<ReplicateResult> out(seeds);
    parallel_for(seeds, workers, [&](std::size_t s) {
        ModelParams params = base;
        params.seed = substream_seed(master, tag, base_index + s);
        ReplicateResult& r = out[s];
        r.alpha = params.alpha;
        r.n = params.n;
        r.replicate = s;
        r.seed = params.seed;

        auto t0 = std::chrono::steady_clock::now();
        VertexSample sample = sample_vertices(params, SampleMode::poisson);
        r.wall_sample = seconds_since(t0);
        r.n_vertices = sample.points.size();
        for (const PolarPoint& p : sample.points) r.max_t = std::max(r.max_t, p.t);

        t0 = std::chrono::steady_clock::now();
        GeometricGraph g = build_edges_bucketed(sample);
        r.wall_build = seconds_since(t0);
        r.n_edges = g.num_edges();

        t0 = std::chrono::steady_clock::now();
        Components comps = connected_components(g);
        r.wall_components = seconds_since(t0);
        r.size_l1 = comps.largest();
        r.size_l2 = comps.second_largest();
    });
    return out;
}

double quantile_type7(std::vector<double> xs, double q) {
    if (xs.empty()) throw parameter_error("quantile of an empty sample");
    q = std::min(1.0, std::max(0.0, q));
    std::sort(xs.begin(), xs.end());
    const double h = static_cast<double>(xs.size() - 1) * q;
    const std::size_t lo = static_cast<std::size_t>(h);
    if (lo + 1 >= xs.size()) return xs.back();
    const double frac = h - static_cast<double>(lo);
    return xs[lo] + frac * (xs[lo + 1] - xs[lo]);
}

LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw parameter_error("least squares needs two or more paired points");
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double denom = n * sxx - sx * sx;
    if (!(std::abs(denom) > 0.0))
        throw parameter_error("least squares needs distinct x values");
    LineFit fit;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    return fit;
}

ScalingResult run_scaling_experiment(const std::vector<double>& alphas,
                                     const std::vector<double>& n_grid,
                                     std::size_t seeds_per_cell, double nu,
                                     std::uint64_t master, unsigned workers) {
    if (alphas.empty()) throw parameter_error("need at least one alpha");
    for (double a : alphas)
        if (!(a > 1.0))
            throw parameter_error("scaling experiment refuses alpha <= 1: outside the "
                                  "subcritical regime it targets");
    if (n_grid.size() < 4)
        throw parameter_error("scaling fit needs at least 4 n-grid points");
    for (std::size_t i = 1; i < n_grid.size(); ++i)
        if (!(n_grid[i] > n_grid[i - 1]))
            throw parameter_error("n grid must be strictly increasing");
    if (seeds_per_cell < 30)
        throw parameter_error("scaling fit needs at least 30 seeds per cell");
    if (!(nu > 0.0)) throw parameter_error("nu must be positive");

    ScalingResult out;
    std::uint64_t cell_index = 0;
    for (double a : alphas) {
        for (double n : n_grid) {
            ModelParams base;
            base.alpha = a;
            base.nu = nu;
            base.n = n;
            auto reps = run_cell(base, seeds_per_cell, master, "scaling",
                                 cell_index * seeds_per_cell, workers);
            ++cell_index;
            std::vector<double> l1s;
            l1s.reserve(reps.size());
            for (const ReplicateResult& r : reps) l1s.push_back(static_cast<double>(r.size_l1));
            ScalingCell cell;
            cell.alpha = a;
            cell.n = n;
            cell.seeds = seeds_per_cell;
            cell.median_l1 = quantile_type7(l1s, 0.5);
            cell.q25_l1 = quantile_type7(l1s, 0.25);
            cell.q75_l1 = quantile_type7(l1s, 0.75);
            out.cells.push_back(cell);
            out.replicates.insert(out.replicates.end(), reps.begin(), reps.end());
        }
    }

    for (double a : alphas) {
        std::vector<double> lx, ly;
        for (const ScalingCell& cell : out.cells) {
            if (cell.alpha != a) continue;
            lx.push_back(std::log(cell.n));
            ly.push_back(std::log(cell.median_l1));
        }
        LineFit lf = least_squares(lx, ly);
        ScalingFitLine fit;
        fit.alpha = a;
        fit.slope = lf.slope;
        fit.intercept = lf.intercept;
        fit.target = 1.0 / (2.0 * a);
        for (std::size_t i = 0; i < lx.size(); ++i)
            fit.residuals.push_back(ly[i] - (lf.intercept + lf.slope * lx[i]));
        out.fits.push_back(fit);
    }
    return out;
}

DeepVertexReport deep_vertex_report(const GeometricGraph& g, double alpha) {
    if (g.num_vertices() == 0) throw parameter_error("empty graph has no deepest vertex");
    DeepVertexReport rep;
    std::uint32_t best = 0;
    for (std::size_t v = 1; v < g.num_vertices(); ++v)
        if (g.points[v].t > g.points[best].t) best = static_cast<std::uint32_t>(v);
    rep.v = best;
    rep.max_t = g.points[best].t;
    rep.degree = g.degree(best);
    rep.ratio = static_cast<double>(rep.degree) / std::exp(rep.max_t / 2.0);
    rep.t_max = g.R / (2.0 * alpha);
    return rep;
}

DeepSlopeFit fit_deep_slope(const GeometricGraph& g, double t_threshold) {
    std::vector<double> ts, logdegs;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        if (!(g.points[v].t > t_threshold)) continue;
        const std::size_t d = g.degree(v);
        if (d == 0) continue;
        ts.push_back(g.points[v].t);
        logdegs.push_back(std::log(static_cast<double>(d)));
    }
    LineFit lf = least_squares(ts, logdegs); // throws when the population is too thin
    DeepSlopeFit fit;
    fit.slope = lf.slope;
    fit.intercept = lf.intercept;
    fit.count = ts.size();
    return fit;
}

std::vector<CoverMcInstance> run_cover_mc(std::size_t n_seeds, std::uint64_t master,
                                          const ModelParams& base, const LayerOptions& lopts,
                                          double c, unsigned workers) {
    std::vector<CoverMcInstance> out(n_seeds);
    parallel_for(n_seeds, workers, [&](std::size_t s) {
        ModelParams params = base;
        params.seed = substream_seed(master, "mc", s);
        CoverMcInstance& inst = out[s];
        inst.seed = params.seed;

        VertexSample sample = sample_vertices(params, SampleMode::poisson);
        GeometricGraph g = build_edges_bucketed(sample);
        LayerDecomposition layers = decompose_layers(g.points, g.R, params.alpha, lopts);
        ZoneCatalog cat = build_zone_catalog(g, layers, params, c);
        inst.separation_event = cat.separation_event;

        ConcentrationVerdict conc = check_concentration(g, layers, params);
        inst.concentration_pass = conc.pass;
        inst.concentration_ratio = conc.max_ratio;

        if (!cat.separation_event) return;
        Components comps = connected_components(g);
        InstanceCoverResult cover = cover_max_t_roots(g, layers, cat, comps);
        inst.n_reports = cover.reports.size();
        inst.n_above_top_roots = cover.n_above_top_roots;
        inst.max_conn = cover.max_conn;
        inst.max_conn_reported = cover.max_conn_reported;
        inst.max_cover = cover.max_cover;
        inst.chain_ok = cover.max_conn_reported <= cover.max_cover;
        for (const CoverReport& rep : cover.reports) {
            if (rep.unlocatable) {
                ++inst.n_unlocatable;
                continue;
            }
            if (!rep.containment) ++inst.n_containment_violations;
            const double ratio = static_cast<double>(rep.size_cover) / rep.bound_rhs;
            inst.max_bound_ratio = std::max(inst.max_bound_ratio, ratio);
        }
        inst.bound_ok = inst.max_bound_ratio <= 1.0;
    });
    return out;
}

} // namespace rhg
