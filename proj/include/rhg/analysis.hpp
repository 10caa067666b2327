#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "rhg/components.hpp"
#include "rhg/cover.hpp"
#include "rhg/graph.hpp"
#include "rhg/layers.hpp"
#include "rhg/params.hpp"

namespace rhg {

// one sampled instance pushed through the full pipeline
struct ReplicateResult {
    double alpha = 0.0;
    double n = 0.0;
    std::size_t replicate = 0;
    std::uint64_t seed = 0;
    std::size_t n_vertices = 0;
    std::size_t n_edges = 0;
    std::size_t size_l1 = 0;
    std::size_t size_l2 = 0;
    double max_t = 0.0;
    // per-phase timings, diagnostic only, never serialized to canonical files
    double wall_sample = 0.0;
    double wall_build = 0.0;
    double wall_components = 0.0;
};

// runs `seeds` replicates of one parameter cell; replicate s draws its seed
// from the (tag, base_index + s) substream of the master seed
std::vector<ReplicateResult> run_cell(const ModelParams& base, std::size_t seeds,
                                      std::uint64_t master, std::string_view tag,
                                      std::uint64_t base_index, unsigned workers);

struct ScalingCell {
    double alpha = 0.0;
    double n = 0.0;
    std::size_t seeds = 0;
    double median_l1 = 0.0;
    double q25_l1 = 0.0;
    double q75_l1 = 0.0;
};

struct ScalingFitLine {
    double alpha = 0.0;
    double slope = 0.0;
    double intercept = 0.0;
    double target = 0.0; // 1/(2*alpha)
    std::vector<double> residuals; // per n-grid point, log median minus fit
};

struct ScalingResult {
    std::vector<ReplicateResult> replicates;
    std::vector<ScalingCell> cells;
    std::vector<ScalingFitLine> fits;
};

// the largest-component scaling experiment over an (alpha, n) grid; needs
// every alpha > 1, at least 4 strictly increasing n values and >= 30 seeds
ScalingResult run_scaling_experiment(const std::vector<double>& alphas,
                                     const std::vector<double>& n_grid,
                                     std::size_t seeds_per_cell, double nu,
                                     std::uint64_t master, unsigned workers);

// type-7 quantile (linear interpolation of order statistics)
double quantile_type7(std::vector<double> xs, double q);

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
};

LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y);

struct DeepVertexReport {
    std::uint32_t v = 0;    // deepest vertex, ties to smallest id
    double max_t = 0.0;
    std::size_t degree = 0;
    double ratio = 0.0;     // degree / e^{max_t/2}
    double t_max = 0.0;     // R/(2*alpha), the typical depth frontier
};

DeepVertexReport deep_vertex_report(const GeometricGraph& g, double alpha);

struct DeepSlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    std::size_t count = 0; // vertices used (deep enough, degree >= 1)
};

// regression of log degree on depth over vertices deeper than the threshold;
// zero-degree vertices are skipped since their log degree is undefined
DeepSlopeFit fit_deep_slope(const GeometricGraph& g, double t_threshold);

// one instance of the covering-component Monte-Carlo
struct CoverMcInstance {
    std::uint64_t seed = 0;
    bool separation_event = false;
    std::size_t n_reports = 0;
    std::size_t n_containment_violations = 0;
    std::size_t n_unlocatable = 0;
    std::size_t n_above_top_roots = 0;
    bool bound_ok = true;          // every report within its cardinality allowance
    double max_bound_ratio = 0.0;  // max size_cover / bound_rhs
    std::size_t max_conn = 0;
    std::size_t max_conn_reported = 0;
    std::size_t max_cover = 0;
    bool chain_ok = true;          // max_conn_reported <= max_cover
    bool concentration_pass = false;
    double concentration_ratio = 0.0;
};

// full per-seed pipeline: sample, build, catalog, covers for all component
// roots, neighborhood concentration; cover fields are meaningful only when
// the separation event holds on that instance
std::vector<CoverMcInstance> run_cover_mc(std::size_t n_seeds, std::uint64_t master,
                                          const ModelParams& base, const LayerOptions& lopts,
                                          double c, unsigned workers);

} // namespace rhg
