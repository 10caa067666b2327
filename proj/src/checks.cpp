#include "rhg/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <ostream>
#include <sstream>
#include <vector>

#include "rhg/analysis.hpp"
#include "rhg/components.hpp"
#include "rhg/cover.hpp"
#include "rhg/errors.hpp"
#include "rhg/geometry.hpp"
#include "rhg/graph.hpp"
#include "rhg/io.hpp"
#include "rhg/layers.hpp"
#include "rhg/parallel.hpp"
#include "rhg/params.hpp"
#include "rhg/rng.hpp"
#include "rhg/sampler.hpp"
#include "rhg/svg.hpp"
#include "rhg/zones.hpp"

namespace rhg {

namespace {

// quantile of chi-square with 31 degrees of freedom at 1 - 1e-4
constexpr double kChi2Df31Bound = 69.10569228986719;

struct CheckOutcome {
    bool pass = false;
    std::string note;
};

class Harness {
public:
    Harness(std::ostream& out, std::ostream& diag) : out_(out), diag_(diag) {}

    template <class F>
    void run(const std::string& name, F&& body) {
        const auto t0 = std::chrono::steady_clock::now();
        CheckOutcome o;
        try {
            o = body();
        } catch (const std::exception& e) {
            o.pass = false;
            o.note = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out_ << (o.pass ? "PASS" : "FAIL") << " " << name;
        if (!o.note.empty()) out_ << ": " << o.note;
        out_ << "\n";
        diag_ << name << " took " << secs << " s\n";
        all_pass_ = all_pass_ && o.pass;
    }

    bool all_pass() const { return all_pass_; }

private:
    std::ostream& out_;
    std::ostream& diag_;
    bool all_pass_ = true;
};

ModelParams make_params(double alpha, double nu, double n, std::uint64_t seed) {
    ModelParams p;
    p.alpha = alpha;
    p.nu = nu;
    p.n = n;
    p.seed = seed;
    return p;
}

std::vector<std::vector<std::uint32_t>> bfs_components(const GeometricGraph& g) {
    const std::size_t n = g.num_vertices();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<std::uint32_t>> comps;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<std::uint32_t> comp{static_cast<std::uint32_t>(s)};
        seen[s] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            const std::uint32_t u = comp[head];
            for (std::size_t e = g.offsets[u]; e < g.offsets[u + 1]; ++e) {
                const auto w = static_cast<std::uint32_t>(g.neighbors[e]);
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.front() < b.front();
    });
    return comps;
}

double radial_cdf(double r, double alpha, double R) {
    const double num = std::sinh(alpha * r / 2.0);
    const double den = std::sinh(alpha * R / 2.0);
    return (num / den) * (num / den);
}

} // namespace

bool run_verify_suite(const VerifyOptions& opts, std::ostream& out, std::ostream& diag) {
    namespace fs = std::filesystem;
    fs::create_directories(opts.out_dir);
    auto path_in = [&](const char* name) { return (fs::path(opts.out_dir) / name).string(); };
    Harness h(out, diag);
    const std::uint64_t master = opts.seed;

    h.run("geometry_triangle_inequality", [&]() -> CheckOutcome {
        Rng rng(substream_seed(master, "verify-geom", 0));
        const double R = 25.0;
        double worst = 0.0;
        for (int rep = 0; rep < 400; ++rep) {
            const double scale = rep < 300 ? R : 600.0;
            const double r1 = scale * rng.uniform01();
            const double r2 = scale * rng.uniform01();
            const double r3 = scale * rng.uniform01();
            const double a1 = kTwoPi * rng.uniform01();
            const double a2 = kTwoPi * rng.uniform01();
            const double a3 = kTwoPi * rng.uniform01();
            const double dab = hyperbolic_distance(r1, r2, circular_distance(a1, a2));
            const double dbc = hyperbolic_distance(r2, r3, circular_distance(a2, a3));
            const double dac = hyperbolic_distance(r1, r3, circular_distance(a1, a3));
            worst = std::max(worst, dac - (dab + dbc));
        }
        CheckOutcome o;
        o.pass = worst <= 1e-9;
        o.note = "max excess " + format_double(worst);
        return o;
    });

    h.run("geometry_edge_rule_equivalence", [&]() -> CheckOutcome {
        Rng rng(substream_seed(master, "verify-geom", 1));
        const double R = 23.0;
        std::size_t tested = 0, agreed = 0;
        for (int rep = 0; rep < 4000; ++rep) {
            const double r1 = R * rng.uniform01();
            const double r2 = R * rng.uniform01();
            const double dth = circular_distance(0.0, kTwoPi * rng.uniform01());
            const double d = hyperbolic_distance(r1, r2, dth);
            const double thc = connection_angle_exact(r1, r2, R);
            if (std::abs(d - R) < 1e-6 || std::abs(dth - thc) < 1e-9) continue;
            ++tested;
            if ((d <= R) == (dth <= thc)) ++agreed;
        }
        CheckOutcome o;
        o.pass = tested > 1000 && agreed == tested;
        o.note = std::to_string(agreed) + "/" + std::to_string(tested) + " pairs agree";
        return o;
    });

    h.run("geometry_angle_leading_order", [&]() -> CheckOutcome {
        Rng rng(substream_seed(master, "verify-geom", 2));
        double worst = 0.0;
        for (int rep = 0; rep < 500; ++rep) {
            const double R = 20.0 + 30.0 * rng.uniform01();
            const double gap = 10.0 + (R - 10.0) * rng.uniform01();
            const double t1 = (R - gap) * rng.uniform01();
            const double t2 = (R - gap) - t1;
            const double exact = connection_angle_exact(R - t1, R - t2, R);
            const double approx = connection_angle_approx(t1, t2, R);
            const double rel = std::abs(approx - exact) / exact;
            worst = std::max(worst, rel / (8.0 * std::exp(-gap / 2.0)));
        }
        CheckOutcome o;
        o.pass = worst <= 1.0;
        o.note = "worst rel-error over allowance " + format_double(worst);
        return o;
    });

    h.run("sampler_poisson_mean", [&]() -> CheckOutcome {
        const std::size_t reps = 1000;
        const double n = 1000.0;
        std::vector<std::size_t> counts(reps);
        parallel_for(reps, opts.workers, [&](std::size_t i) {
            const auto params =
                make_params(1.5, 1.0, n, substream_seed(master, "verify-mean", i));
            counts[i] = sample_vertices(params, SampleMode::poisson).points.size();
        });
        double mean = 0.0;
        for (std::size_t c : counts) mean += static_cast<double>(c);
        mean /= static_cast<double>(reps);
        const double band = 4.0 * std::sqrt(n / static_cast<double>(reps));
        CheckOutcome o;
        o.pass = std::abs(mean - n) <= band;
        o.note = "mean " + format_double(mean) + " target " + format_double(n) + " +- " +
                 format_double(band);
        return o;
    });

    h.run("sampler_radial_ks", [&]() -> CheckOutcome {
        const auto params = make_params(1.5, 1.0, 1e5, substream_seed(master, "verify-ks", 0));
        const VertexSample s = sample_vertices(params, SampleMode::fixed);
        std::vector<double> radii;
        radii.reserve(s.points.size());
        for (const PolarPoint& p : s.points) radii.push_back(s.R - p.t);
        std::sort(radii.begin(), radii.end());
        double ks = 0.0;
        const double m = static_cast<double>(radii.size());
        for (std::size_t i = 0; i < radii.size(); ++i) {
            const double f = radial_cdf(radii[i], params.alpha, s.R);
            ks = std::max(ks, std::abs(f - static_cast<double>(i) / m));
            ks = std::max(ks, std::abs(f - static_cast<double>(i + 1) / m));
        }
        CheckOutcome o;
        o.pass = ks <= 0.01;
        o.note = "KS " + format_double(ks);
        return o;
    });

    h.run("sampler_radial_chi2", [&]() -> CheckOutcome {
        const auto params =
            make_params(1.5, 1.0, 1e5, substream_seed(master, "verify-chi2", 0));
        const VertexSample s = sample_vertices(params, SampleMode::fixed);
        const std::size_t bins = 32;
        std::vector<double> edges;
        for (std::size_t k = 1; k < bins; ++k)
            edges.push_back(sample_radius(static_cast<double>(k) / static_cast<double>(bins),
                                          params.alpha, s.R));
        std::vector<std::size_t> counts(bins, 0);
        for (const PolarPoint& p : s.points) {
            const double r = s.R - p.t;
            const std::size_t b = static_cast<std::size_t>(
                std::upper_bound(edges.begin(), edges.end(), r) - edges.begin());
            ++counts[b];
        }
        const double expected = static_cast<double>(s.points.size()) / static_cast<double>(bins);
        double chi2 = 0.0;
        for (std::size_t b = 0; b < bins; ++b) {
            const double d = static_cast<double>(counts[b]) - expected;
            chi2 += d * d / expected;
        }
        CheckOutcome o;
        o.pass = chi2 <= kChi2Df31Bound;
        o.note = "chi2 " + format_double(chi2) + " bound " + format_double(kChi2Df31Bound);
        return o;
    });

    h.run("graph_bucketed_vs_naive", [&]() -> CheckOutcome {
        const double alphas[] = {1.1, 1.5, 2.5};
        std::size_t checked = 0;
        for (std::size_t i = 0; i < 3; ++i) {
            const auto params =
                make_params(alphas[i], 1.0, 600.0, substream_seed(master, "verify-oracle", i));
            const VertexSample s = sample_vertices(params, SampleMode::poisson);
            const GeometricGraph a = build_edges_naive(s);
            const GeometricGraph b = build_edges_bucketed(s, opts.workers);
            if (a.edges != b.edges)
                return {false, "edge mismatch at alpha " + format_double(alphas[i])};
            checked += a.edges.size();
        }
        return {true, std::to_string(checked) + " edges matched across 3 instances"};
    });

    h.run("components_vs_bfs", [&]() -> CheckOutcome {
        const auto params = make_params(1.2, 1.0, 5000.0, substream_seed(master, "verify-bfs", 0));
        const VertexSample s = sample_vertices(params, SampleMode::poisson);
        const GeometricGraph g = build_edges_bucketed(s, opts.workers);
        const Components comps = connected_components(g);
        const auto oracle = bfs_components(g);
        if (comps.count() != oracle.size()) return {false, "component count mismatch"};
        for (std::size_t c = 0; c < comps.count(); ++c) {
            const std::vector<std::uint32_t> members(
                comps.members.begin() + comps.member_offsets[c],
                comps.members.begin() + comps.member_offsets[c + 1]);
            if (members != oracle[c])
                return {false, "membership mismatch at component " + std::to_string(c)};
        }
        return {true, std::to_string(comps.count()) + " components, largest " +
                          std::to_string(comps.largest())};
    });

    h.run("layer_masses_match_annulus_measure", [&]() -> CheckOutcome {
        const std::size_t reps = 500;
        const double n = 1e4, alpha = 1.5;
        LayerOptions lopts;
        lopts.base_offset = 1.0;
        lopts.spacing = 1.0;
        const double R = make_params(alpha, 1.0, n, 1).radius();
        const LayerDecomposition shape = decompose_layers({}, R, alpha, lopts);
        const std::size_t n_layers = shape.t_levels.size();
        std::vector<std::vector<std::size_t>> slots(reps);
        parallel_for(reps, opts.workers, [&](std::size_t rep) {
            const auto params =
                make_params(alpha, 1.0, n, substream_seed(master, "verify-mass", rep));
            const VertexSample s = sample_vertices(params, SampleMode::poisson);
            const LayerDecomposition lay = decompose_layers(s.points, s.R, alpha, lopts);
            std::vector<std::size_t> counts(n_layers + 1, 0);
            for (std::size_t i = 0; i < n_layers; ++i) counts[i] = lay.layers[i].size();
            counts[n_layers] = lay.above_top.size();
            slots[rep] = std::move(counts);
        });
        std::string note;
        bool pass = true;
        for (std::size_t i = 0; i <= n_layers; ++i) {
            const double lo_t = i == 0 ? 0.0 : shape.t_levels[i - 1];
            const double mass = i < n_layers
                                    ? ball_measure(R - lo_t, R, alpha) -
                                          ball_measure(R - shape.t_levels[i], R, alpha)
                                    : ball_measure(R - shape.t_levels.back(), R, alpha);
            const double expected = static_cast<double>(reps) * n * mass;
            double observed = 0.0;
            for (const auto& cs : slots) observed += static_cast<double>(cs[i]);
            const double band = 3.0 * std::sqrt(expected);
            if (std::abs(observed - expected) > band) pass = false;
            if (!note.empty()) note += ", ";
            note += (i < n_layers ? "band " + std::to_string(i) : std::string("above-top")) +
                    " " + format_double(observed) + " vs " + format_double(expected);
        }
        return {pass, note};
    });

    // the zone and cover checks share one instance where the separation event
    // holds; the first qualifying substream index is chosen deterministically
    ModelParams zone_params = make_params(1.5, 1.0, 1e5, 0);
    LayerOptions zone_lopts;
    zone_lopts.base_offset = 1.0;
    zone_lopts.spacing = 1.0;
    const double zone_c = 10.0;
    GeometricGraph zone_g;
    LayerDecomposition zone_layers;
    ZoneCatalog zone_cat;
    bool zone_ready = false;
    std::size_t zone_index = 0;

    h.run("zone_catalog_separation_event", [&]() -> CheckOutcome {
        for (std::size_t idx = 0; idx < 10; ++idx) {
            zone_params.seed = substream_seed(master, "verify-zones", idx);
            const VertexSample s = sample_vertices(zone_params, SampleMode::poisson);
            GeometricGraph g = build_edges_bucketed(s, opts.workers);
            LayerDecomposition lay =
                decompose_layers(g.points, g.R, zone_params.alpha, zone_lopts);
            ZoneCatalog cat =
                build_zone_catalog(g, lay, zone_params, zone_c, 0.01, opts.workers);
            if (cat.separation_event) {
                zone_g = std::move(g);
                zone_layers = std::move(lay);
                zone_cat = std::move(cat);
                zone_ready = true;
                zone_index = idx;
                break;
            }
        }
        CheckOutcome o;
        o.pass = zone_ready;
        o.note = zone_ready
                     ? "separation event holds at substream index " + std::to_string(zone_index)
                     : "no qualifying instance in 10 substreams";
        return o;
    });

    h.run("zone_catalog_brute_force", [&]() -> CheckOutcome {
        if (!zone_ready) return {false, "no instance"};
        const double c_r = zone_c * zone_cat.R;
        for (const LayerZones& lz : zone_cat.layers) {
            const std::size_t k_max_expect = static_cast<std::size_t>(
                std::ceil(kTwoPi / (3.0 * c_r * lz.theta_ii)));
            if (lz.k_max != std::max<std::size_t>(1, k_max_expect))
                return {false, "k_max mismatch at layer " + std::to_string(lz.i)};
            const double step = 2.0 * lz.theta_ii;
            for (const ZoneInfo& z : lz.zones) {
                if (!z.found) return {false, "missing zone despite the separation event"};
                const double anchor = 3.0 * c_r * static_cast<double>(z.k) * lz.theta_ii;
                // the found zone must be brute-force empty
                for (const PolarPoint& p : zone_g.points)
                    if (zone_contains(lz.t_level, z.theta_center, p, zone_g.R))
                        return {false, "vertex inside a cataloged zone"};
                // and every earlier candidate must be brute-force occupied
                for (std::size_t jp = 0; jp < z.j; ++jp) {
                    const double center = wrap_angle(anchor + step * static_cast<double>(jp));
                    bool occupied = false;
                    for (const PolarPoint& p : zone_g.points)
                        if (zone_contains(lz.t_level, center, p, zone_g.R)) {
                            occupied = true;
                            break;
                        }
                    if (!occupied)
                        return {false, "candidate before the chosen zone was already empty"};
                }
                // gap recomputed from raw centers
                const ZoneInfo& nxt = lz.zones[(z.k + 1) % lz.k_max];
                const double gap =
                    std::max(0.0, wrap_angle(nxt.theta_center - z.theta_center) - step);
                if (gap != z.gap_to_next)
                    return {false, "gap mismatch at layer " + std::to_string(lz.i)};
                const bool ok_expect =
                    lz.k_max == 1 ||
                    (gap >= c_r * lz.theta_ii && gap <= 5.0 * c_r * lz.theta_ii);
                if (ok_expect != z.gap_ok)
                    return {false, "gap verdict mismatch at layer " + std::to_string(lz.i)};
            }
        }
        return {true, "all zones re-verified by full scans"};
    });

    h.run("zone_regions_disconnected", [&]() -> CheckOutcome {
        if (!zone_ready) return {false, "no instance"};
        const SeparationReport rep = assert_separation(zone_g, zone_layers, zone_cat);
        CheckOutcome o;
        o.pass = rep.ok;
        o.note = std::to_string(rep.n_edge_violations) + " edge and " +
                 std::to_string(rep.n_component_violations) + " component violations";
        return o;
    });

    h.run("theta_neighborhood_brute_force", [&]() -> CheckOutcome {
        if (!zone_ready) return {false, "no instance"};
        Rng rng(substream_seed(master, "verify-theta", 0));
        std::size_t checked = 0;
        for (std::size_t i = 1; i < zone_layers.t_levels.size(); ++i) {
            if (zone_layers.layers[i].empty()) continue;
            for (std::size_t j = 0; j < i; ++j) {
                for (int rep = 0; rep < 7; ++rep) {
                    const auto& li = zone_layers.layers[i];
                    const std::uint32_t v =
                        li[static_cast<std::size_t>(rng.uniform01() * li.size()) % li.size()];
                    const auto got = theta_neighborhood(v, i, j, zone_g, zone_layers);
                    const double th = zone_layers.theta(i, j);
                    const double lo = zone_g.points[v].theta - 2.0 * th;
                    std::vector<std::uint32_t> want;
                    for (std::uint32_t u : zone_layers.layers[j])
                        if (wrap_angle(zone_g.points[u].theta - lo) < 4.0 * th)
                            want.push_back(u);
                    if (got != want)
                        return {false, "neighborhood mismatch at (i,j) = (" +
                                           std::to_string(i) + "," + std::to_string(j) + ")"};
                    ++checked;
                }
            }
        }
        return {true, std::to_string(checked) + " neighborhoods matched brute force"};
    });

    h.run("cover_containment_and_chain", [&]() -> CheckOutcome {
        if (!zone_ready) return {false, "no instance"};
        const Components comps = connected_components(zone_g);
        const InstanceCoverResult cover =
            cover_max_t_roots(zone_g, zone_layers, zone_cat, comps);
        std::size_t bad = 0, unloc = 0;
        for (const CoverReport& rep : cover.reports) {
            if (rep.unlocatable) {
                ++unloc;
                continue;
            }
            if (!rep.containment) ++bad;
            if (!rep.is_max_t_root) return {false, "report for a non-root vertex"};
            if (rep.size_C_v < 1 || rep.size_cover < rep.size_C_v || rep.size_conn < 1)
                return {false, "report cardinality invariant violated"};
        }
        const bool chain = cover.max_conn_reported <= cover.max_cover;
        const bool strong =
            cover.n_above_top_roots > 0 || cover.max_conn == cover.max_conn_reported;
        write_text_file(path_in("reports.jsonl"), cover_reports_to_jsonl(cover.reports));
        write_text_file(path_in("cover_summary.json"), cover_summary_to_json(cover));
        CheckOutcome o;
        o.pass = bad == 0 && unloc == 0 && chain && strong;
        o.note = std::to_string(cover.reports.size()) + " roots, " + std::to_string(bad) +
                 " containment failures, largest component " + std::to_string(cover.max_conn) +
                 " vs largest cover " + std::to_string(cover.max_cover) + ", " +
                 std::to_string(cover.n_above_top_roots) + " above-top roots";
        return o;
    });

    h.run("neighborhood_concentration", [&]() -> CheckOutcome {
        if (!zone_ready) return {false, "no instance"};
        const ConcentrationVerdict v = check_concentration(zone_g, zone_layers, zone_params);
        CheckOutcome o;
        o.pass = v.pass;
        o.note = "max ratio " + format_double(v.max_ratio);
        return o;
    });

    h.run("catalog_json_written", [&]() -> CheckOutcome {
        if (!zone_ready) return {false, "no instance"};
        write_text_file(path_in("catalog.json"), catalog_to_json(zone_cat));
        return {true, "catalog.json"};
    });

    h.run("scaling_mini_slope", [&]() -> CheckOutcome {
        const ScalingResult res =
            run_scaling_experiment({1.5}, {256.0, 512.0, 1024.0, 2048.0}, 30, 1.0,
                                   substream_seed(master, "verify-scaling", 0), opts.workers);
        write_text_file(path_in("scaling.csv"), scaling_to_csv(res.replicates));
        const ScalingFitLine& fit = res.fits.front();
        CheckOutcome o;
        o.pass = std::abs(fit.slope - fit.target) <= 0.25;
        o.note = "slope " + format_double(fit.slope) + " target " + format_double(fit.target);
        return o;
    });

    h.run("io_round_trip", [&]() -> CheckOutcome {
        const auto params = make_params(1.5, 1.0, 2000.0, substream_seed(master, "verify-gen", 0));
        const VertexSample s = sample_vertices(params, SampleMode::poisson);
        const GeometricGraph g = build_edges_bucketed(s, opts.workers);
        write_text_file(path_in("vertices.csv"), vertices_to_csv(g.points));
        write_text_file(path_in("edges.csv"), edges_to_csv(g.edges));
        write_text_file(path_in("graph.json"), graph_summary_to_json(g, params));
        const auto points2 = parse_vertices_csv(read_text_file(path_in("vertices.csv")));
        const auto edges2 = parse_edges_csv(read_text_file(path_in("edges.csv")));
        if (points2.size() != g.points.size() || edges2 != g.edges)
            return {false, "round trip changed the data"};
        for (std::size_t v = 0; v < points2.size(); ++v)
            if (points2[v].t != g.points[v].t || points2[v].theta != g.points[v].theta)
                return {false, "round trip changed coordinates at id " + std::to_string(v)};
        return {true, std::to_string(g.num_vertices()) + " vertices and " +
                          std::to_string(g.num_edges()) + " edges round-tripped exactly"};
    });

    h.run("svg_render", [&]() -> CheckOutcome {
        // a rendered small realization plus the two structural edge cases
        const auto params = make_params(1.1, 1.0, 300.0, substream_seed(master, "verify-svg", 0));
        const VertexSample s = sample_vertices(params, SampleMode::poisson);
        const GeometricGraph g = build_edges_bucketed(s, opts.workers);
        const std::string svg = render_svg(g, connected_components(g));
        write_text_file(path_in("fig.svg"), svg);

        GeometricGraph empty;
        empty.R = 10.0;
        empty.offsets = {0};
        const std::string svg_empty = render_svg(empty, connected_components(empty));
        auto count = [](const std::string& hay, const std::string& needle) {
            std::size_t c = 0, pos = 0;
            while ((pos = hay.find(needle, pos)) != std::string::npos) {
                ++c;
                pos += needle.size();
            }
            return c;
        };
        if (count(svg_empty, "<circle") != 2 || count(svg_empty, "<line") != 0)
            return {false, "empty graph should render exactly the two reference circles"};

        GeometricGraph pair_g = graph_from_edges({{1.0, 0.1}, {2.0, 0.2}}, {{0, 1}}, 10.0);
        const std::string svg_pair = render_svg(pair_g, connected_components(pair_g));
        if (count(svg_pair, "<line") != 1)
            return {false, "two connected vertices should render exactly one line"};
        return {true, "fig.svg and structural cases"};
    });

    h.run("worker_count_independence", [&]() -> CheckOutcome {
        const auto params =
            make_params(1.5, 1.0, 20000.0, substream_seed(master, "verify-workers", 0));
        const VertexSample s = sample_vertices(params, SampleMode::poisson);
        const GeometricGraph g1 = build_edges_bucketed(s, 1);
        const GeometricGraph g8 = build_edges_bucketed(s, 8);
        if (g1.edges != g8.edges) return {false, "edge set depends on worker count"};
        ModelParams base = make_params(1.3, 1.0, 3000.0, 0);
        const auto r1 = run_cell(base, 6, master, "verify-workers-cell", 0, 1);
        const auto r4 = run_cell(base, 6, master, "verify-workers-cell", 0, 4);
        for (std::size_t i = 0; i < r1.size(); ++i)
            if (r1[i].n_vertices != r4[i].n_vertices || r1[i].n_edges != r4[i].n_edges ||
                r1[i].size_l1 != r4[i].size_l1 || r1[i].seed != r4[i].seed)
                return {false, "replicate results depend on worker count"};
        return {true, std::to_string(g1.num_edges()) + " edges identical at 1 and 8 workers"};
    });

    out << (h.all_pass() ? "VERIFY PASS" : "VERIFY FAIL") << "\n";
    return h.all_pass();
}

} // namespace rhg
