#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "rhg/components.hpp"
#include "rhg/graph.hpp"
#include "rhg/layers.hpp"
#include "rhg/zones.hpp"

namespace rhg {

// Covering components approximate true connected components from above by a
// layered recursion: the reach set of a vertex unions the reach sets of every
// lower-layer vertex in its admissible angular neighborhood, and the covering
// component of a region pools the reach sets of all same-layer vertices in it.

struct CoverReport {
    std::uint32_t v = 0;
    std::size_t layer = 0;       // i with v in band i
    int region = -1;             // k with v in region k of its layer
    std::size_t size_C_v = 0;    // reach set of v alone
    std::size_t size_cover = 0;  // pooled cover of v's region
    std::size_t size_conn = 0;   // true connected component of v
    bool is_max_t_root = false;  // v is the deepest vertex of its component
    bool containment = false;    // component a subset of the cover
    bool unlocatable = false;    // v sits inside a zone, cover undefined
    double bound_rhs = 0.0;      // exp(2*t_0 + t_i/2) cardinality allowance
};

// layer-j vertices within circular angle 2*theta_{i,j} of v's angle, in the
// half-open sector sense (left edge in, right edge out); requires j < i
std::vector<std::uint32_t> theta_neighborhood(std::uint32_t v, std::size_t i, std::size_t j,
                                              const GeometricGraph& g,
                                              const LayerDecomposition& layers);

class CoverBuilder {
public:
    // the catalog must certify the separation event before covers make sense;
    // reach sets alone work without it
    CoverBuilder(const GeometricGraph& g, const LayerDecomposition& layers,
                 const ZoneCatalog& cat);

    // reach set of v, ascending ids; memoized across calls
    const std::vector<std::uint32_t>& c_set(std::uint32_t v);
    // pooled cover of region k of layer i, ascending ids; cached per cell
    const std::vector<std::uint32_t>& cell_cover(std::size_t i, std::size_t k);
    // full report for v given its component's member list (ascending ids)
    CoverReport report_for_root(std::uint32_t v, const std::vector<std::uint32_t>& conn_sorted);

private:
    const GeometricGraph& g_;
    const LayerDecomposition& layers_;
    const ZoneCatalog& cat_;
    std::vector<std::size_t> layer_of_;
    std::vector<std::unique_ptr<std::vector<std::uint32_t>>> memo_;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::uint32_t>> cells_;
};

// one-shot variants
std::vector<std::uint32_t> build_C_v(std::uint32_t v, const GeometricGraph& g,
                                     const LayerDecomposition& layers);
CoverReport build_cover(std::uint32_t v, const GeometricGraph& g,
                        const LayerDecomposition& layers, const ZoneCatalog& cat);

struct InstanceCoverResult {
    std::vector<CoverReport> reports;    // one per component rooted below the top level
    std::size_t n_above_top_roots = 0;   // components whose deepest vertex is too deep
    std::size_t max_conn = 0;            // largest component overall
    std::size_t max_conn_reported = 0;   // largest component among reported roots
    std::size_t max_cover = 0;           // largest pooled cover among reports
};

// reports for the deepest vertex of every component (ties to smallest id)
InstanceCoverResult cover_max_t_roots(const GeometricGraph& g, const LayerDecomposition& layers,
                                      const ZoneCatalog& cat, const Components& comps);

struct ConcentrationVerdict {
    bool pass = true;
    double max_ratio = 0.0;
    std::size_t worst_i = 0, worst_j = 0;
    std::uint32_t worst_v = 0;
    std::size_t worst_count = 0;
    double worst_allowance = 0.0;
};

// checks every neighborhood count against 4*max(8R, expected count at the
// band tops), where the expectation uses the exact annulus mass
ConcentrationVerdict check_concentration(const GeometricGraph& g,
                                         const LayerDecomposition& layers,
                                         const ModelParams& params);

} // namespace rhg
