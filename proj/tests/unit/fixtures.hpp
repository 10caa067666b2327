#pragma once

// Shared sampled instances, built once per test run.

#include <cstdint>

#include "rhg/graph.hpp"
#include "rhg/layers.hpp"
#include "rhg/rng.hpp"
#include "rhg/sampler.hpp"
#include "rhg/zones.hpp"

namespace fixtures {

struct Instance {
    rhg::ModelParams params;
    rhg::VertexSample sample;
    rhg::GeometricGraph graph;
    rhg::LayerDecomposition layers;
    rhg::ZoneCatalog catalog;
};

// the multi-layer working point: alpha 3/2, n = 1e5, overridden layer
// constants (base 1, spacing 1), c = 10.  The separation event holds with
// probability ~0.9 per seed, so the first qualifying seed of a fixed
// substream is scanned for deterministically; the scan itself is part of
// the fixture's definition, not a retry loop.
inline const Instance& separation_instance() {
    static const Instance inst = [] {
        Instance out;
        out.params.alpha = 1.5;
        out.params.nu = 1.0;
        out.params.n = 1e5;
        rhg::LayerOptions lopts;
        lopts.base_offset = 1.0;
        lopts.spacing = 1.0;
        for (std::uint64_t i = 0; i < 20; ++i) {
            out.params.seed = rhg::substream_seed(1, "fixture", i);
            out.sample = rhg::sample_vertices(out.params, rhg::SampleMode::poisson);
            out.graph = rhg::build_edges_bucketed(out.sample, 4);
            out.layers = rhg::decompose_layers(out.graph.points, out.graph.R,
                                               out.params.alpha, lopts);
            out.catalog =
                rhg::build_zone_catalog(out.graph, out.layers, out.params, 10.0, 0.01, 4);
            if (out.catalog.separation_event) break;
        }
        return out;
    }();
    return inst;
}

// a small generic instance for brute-force comparisons
inline const Instance& small_instance() {
    static const Instance inst = [] {
        Instance out;
        out.params.alpha = 1.2;
        out.params.nu = 1.0;
        out.params.n = 2000.0;
        out.params.seed = 33;
        out.sample = rhg::sample_vertices(out.params, rhg::SampleMode::poisson);
        out.graph = rhg::build_edges_bucketed(out.sample);
        return out;
    }();
    return inst;
}

} // namespace fixtures
