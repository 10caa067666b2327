#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rhg/graph.hpp"
#include "rhg/layers.hpp"
#include "rhg/params.hpp"

namespace rhg {

// A separation zone at level t0 around a center angle is the hourglass region
// of points with t <= t0 whose angular offset from the center stays within the
// admissible width at their own depth.  An empty zone disconnects everything
// on its two sides up to level t0.

bool zone_contains(double t0, double theta0, const PolarPoint& p, double R);

// true when no vertex lies in the zone; points must be in angular order
bool zone_is_empty(const GeometricGraph& g, double t0, double theta0);

struct ZoneSearchResult {
    bool found = false;
    std::size_t j = 0;
    double theta_center = 0.0;
};

// smallest j in {0..j_cap} such that the zone at anchor + j*step is empty
ZoneSearchResult find_zone_right_of(const GeometricGraph& g, double t0, double anchor,
                                    double step, std::size_t j_cap);

// forward arc between zone centers minus one zone width, floored at zero
double zone_gap(double center_a, double center_b, double theta_ii);

// smallest c such that a run of ceil(c*R)+1 candidate zones misses an empty
// one with probability at most target, using a crude per-candidate bound on
// the expected occupancy of a zone at the given level
double estimate_c(double t_level, const ModelParams& params, double target);

struct ZoneInfo {
    std::size_t k = 0;
    std::size_t j = 0;           // steps taken from the anchor (when found)
    double theta_center = 0.0;   // meaningful only when found
    bool found = false;
    double gap_to_next = 0.0;    // to the cyclic successor; 0 when either is missing
    bool gap_ok = false;
};

struct LayerZones {
    std::size_t i = 0;
    double t_level = 0.0;
    double theta_ii = 0.0;
    std::size_t k_max = 0;
    bool ok = false;
    std::string diagnostic;      // empty when ok
    double c_estimate = 0.0;
    std::vector<ZoneInfo> zones; // indices 0..k_max-1; zone k_max is zone 0 again
};

struct ZoneCatalog {
    double R = 0.0;
    double c = 0.0;
    double base_offset = 0.0;
    double spacing = 0.0;
    bool degenerate = false;
    bool separation_event = false; // every layer has all zones with bracketed gaps
    double c_estimate_target = 0.0;
    std::vector<LayerZones> layers;
};

ZoneCatalog build_zone_catalog(const GeometricGraph& g, const LayerDecomposition& layers,
                               const ModelParams& params, double c,
                               double c_estimate_target = 0.01, unsigned workers = 1);

// region index for a point at or below the layer level: -1 inside a zone,
// -2 when the layer has no zones at all, otherwise the index of the zone
// bounding the region on its counterclockwise side
int locate_region(const LayerZones& lz, const PolarPoint& p, double R);

struct SeparationViolation {
    std::size_t layer = 0;
    bool component_kind = false; // false: a single edge crosses regions
    std::uint32_t u = 0, v = 0;
    int region_u = 0, region_v = 0;
    PolarPoint pu, pv;
};

struct SeparationReport {
    bool ok = true;
    std::size_t n_edge_violations = 0;
    std::size_t n_component_violations = 0;
    std::vector<SeparationViolation> samples; // capped
};

// verifies that, per layer, no edge or connected component of the subgraph at
// or below the layer level spans two different regions; requires the
// separation event to hold
SeparationReport assert_separation(const GeometricGraph& g, const LayerDecomposition& layers,
                                   const ZoneCatalog& cat, std::size_t sample_cap = 20);

} // namespace rhg
