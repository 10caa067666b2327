#include <cmath>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "rhg/analysis.hpp"
#include "rhg/checks.hpp"
#include "rhg/components.hpp"
#include "rhg/cover.hpp"
#include "rhg/errors.hpp"
#include "rhg/graph.hpp"
#include "rhg/io.hpp"
#include "rhg/layers.hpp"
#include "rhg/params.hpp"
#include "rhg/sampler.hpp"
#include "rhg/svg.hpp"
#include "rhg/zones.hpp"

namespace {

double parse_number(const std::string& s) {
    char* end = nullptr;
    const double x = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0')
        throw rhg::parameter_error("malformed number '" + s + "'");
    return x;
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        const std::size_t pos = s.find(',', start);
        const std::string tok =
            pos == std::string::npos ? s.substr(start) : s.substr(start, pos - start);
        out.push_back(parse_number(tok));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

// either a comma list or a geometric sweep start:end:xfactor
std::vector<double> parse_n_grid(const std::string& s) {
    if (s.find(':') == std::string::npos) return parse_list(s);
    const std::size_t p1 = s.find(':');
    const std::size_t p2 = s.find(':', p1 + 1);
    if (p2 == std::string::npos)
        throw rhg::parameter_error("n grid sweep must look like 4096:1048576:x2");
    const double a = parse_number(s.substr(0, p1));
    const double b = parse_number(s.substr(p1 + 1, p2 - p1 - 1));
    const std::string fac_s = s.substr(p2 + 1);
    if (fac_s.size() < 2 || (fac_s[0] != 'x' && fac_s[0] != 'X'))
        throw rhg::parameter_error("sweep factor must look like x2");
    const double fac = parse_number(fac_s.substr(1));
    if (!(a > 0.0) || !(b >= a) || !(fac > 1.0))
        throw rhg::parameter_error("sweep needs 0 < start <= end and factor > 1");
    std::vector<double> out;
    for (double v = a; v <= b * (1.0 + 1e-9); v *= fac) out.push_back(v);
    return out;
}

void warn_if_not_subcritical(const rhg::ModelParams& p) {
    if (!p.subcritical())
        std::cerr << "note: alpha <= 1 is outside the subcritical regime this toolkit "
                     "targets; the largest component is typically giant\n";
}

struct SampledInstance {
    rhg::ModelParams params;
    rhg::GeometricGraph graph;
};

SampledInstance sample_and_build(double alpha, double nu, double n, std::uint64_t seed,
                                 const std::string& mode, unsigned workers,
                                 const std::string& builder) {
    SampledInstance inst;
    inst.params.alpha = alpha;
    inst.params.nu = nu;
    inst.params.n = n;
    inst.params.seed = seed;
    inst.params.validate();
    warn_if_not_subcritical(inst.params);
    const auto m = mode == "fixed" ? rhg::SampleMode::fixed : rhg::SampleMode::poisson;
    const rhg::VertexSample s = rhg::sample_vertices(inst.params, m);
    inst.graph = builder == "naive" ? rhg::build_edges_naive(s)
                                    : rhg::build_edges_bucketed(s, workers);
    return inst;
}

std::string components_summary_json(const rhg::GeometricGraph& g, const rhg::Components& comps,
                                    double alpha, double nu, double n) {
    double max_t = 0.0;
    for (const auto& p : g.points) max_t = std::max(max_t, p.t);
    std::string out = "{";
    out += "\"n_vertices\":" + std::to_string(g.num_vertices());
    out += ",\"n_edges\":" + std::to_string(g.num_edges());
    out += ",\"n_components\":" + std::to_string(comps.count());
    out += ",\"size_l1\":" + std::to_string(comps.largest());
    out += ",\"size_l2\":" + std::to_string(comps.second_largest());
    out += ",\"max_t\":" + rhg::format_double(max_t);
    if (alpha > 0.0 && n > 0.0 && g.num_vertices() > 0) {
        const rhg::DeepVertexReport deep = rhg::deep_vertex_report(g, alpha);
        out += ",\"deep\":{\"v\":" + std::to_string(deep.v);
        out += ",\"degree\":" + std::to_string(deep.degree);
        out += ",\"ratio\":" + rhg::format_double(deep.ratio);
        out += ",\"t_max\":" + rhg::format_double(2.0 * std::log(n / nu) /
                                                  (2.0 * alpha));
        out += "}";
    }
    out += "}\n";
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sampling, analysis and verification for random hyperbolic graphs in the "
                 "thin-tail regime"};
    app.require_subcommand(1);
    int exit_code = 0;

    // generate
    double g_alpha = 0, g_nu = 1.0, g_n = 0;
    std::uint64_t g_seed = 1;
    std::string g_mode = "poisson", g_out_v = "v.csv", g_out_e = "e.csv", g_summary,
                g_builder = "bucketed";
    unsigned g_workers = 1;
    auto* gen = app.add_subcommand("generate", "sample a realization and write its graph");
    gen->add_option("--alpha", g_alpha, "radial density exponent")->required();
    gen->add_option("--nu", g_nu, "intensity scale")->capture_default_str();
    gen->add_option("--n", g_n, "expected vertex count")->required();
    gen->add_option("--seed", g_seed, "RNG seed")->capture_default_str();
    gen->add_option("--mode", g_mode, "poisson or fixed vertex count")
        ->check(CLI::IsMember({"poisson", "fixed"}))
        ->capture_default_str();
    gen->add_option("--out-vertices", g_out_v, "vertex CSV path")->capture_default_str();
    gen->add_option("--out-edges", g_out_e, "edge CSV path")->capture_default_str();
    gen->add_option("--summary", g_summary, "optional summary JSON path");
    gen->add_option("--workers", g_workers, "threads for edge construction")
        ->capture_default_str();
    gen->add_option("--builder", g_builder, "edge construction strategy")
        ->check(CLI::IsMember({"bucketed", "naive"}))
        ->capture_default_str();
    gen->callback([&]() {
        const SampledInstance inst =
            sample_and_build(g_alpha, g_nu, g_n, g_seed, g_mode, g_workers, g_builder);
        rhg::write_text_file(g_out_v, rhg::vertices_to_csv(inst.graph.points));
        rhg::write_text_file(g_out_e, rhg::edges_to_csv(inst.graph.edges));
        if (!g_summary.empty())
            rhg::write_text_file(g_summary,
                                 rhg::graph_summary_to_json(inst.graph, inst.params));
    });

    // components
    std::string c_in_v, c_in_e, c_summary = "out.json";
    double c_alpha = 0, c_nu = 1.0, c_n = 0;
    auto* comp = app.add_subcommand("components", "component statistics of a stored graph");
    comp->add_option("--in-vertices", c_in_v, "vertex CSV path")->required();
    comp->add_option("--in-edges", c_in_e, "edge CSV path")->required();
    comp->add_option("--summary", c_summary, "summary JSON path")->capture_default_str();
    comp->add_option("--alpha", c_alpha, "model exponent, enables depth statistics");
    comp->add_option("--nu", c_nu, "intensity scale")->capture_default_str();
    comp->add_option("--n", c_n, "expected vertex count, enables depth statistics");
    comp->callback([&]() {
        const auto points = rhg::parse_vertices_csv(rhg::read_text_file(c_in_v));
        const auto edges = rhg::parse_edges_csv(rhg::read_text_file(c_in_e));
        const double R =
            c_alpha > 0.0 && c_n > 0.0 ? 2.0 * std::log(c_n / c_nu) : 0.0;
        const rhg::GeometricGraph g = rhg::graph_from_edges(points, edges, R);
        const rhg::Components comps = rhg::connected_components(g);
        rhg::write_text_file(c_summary, components_summary_json(g, comps, c_alpha, c_nu, c_n));
    });

    // zones / cover share their sampling flags
    double z_alpha = 0, z_nu = 1.0, z_n = 0, z_c = 10.0, z_base = -1.0, z_spacing = 3.0,
           z_target = 0.01;
    std::uint64_t z_seed = 1;
    std::string z_mode = "poisson";
    unsigned z_workers = 1;
    std::string z_out = "catalog.json";
    std::string cov_out = "reports.jsonl", cov_summary;
    auto add_zone_flags = [&](CLI::App* sub) {
        sub->add_option("--alpha", z_alpha, "radial density exponent")->required();
        sub->add_option("--nu", z_nu, "intensity scale")->capture_default_str();
        sub->add_option("--n", z_n, "expected vertex count")->required();
        sub->add_option("--seed", z_seed, "RNG seed")->capture_default_str();
        sub->add_option("--c", z_c, "zone search width constant")->capture_default_str();
        sub->add_option("--layer-base", z_base,
                        "first level in units of log R; negative derives 4a/(a-1)")
            ->capture_default_str();
        sub->add_option("--layer-spacing", z_spacing, "level spacing in units of log R")
            ->capture_default_str();
        sub->add_option("--c-estimate-target", z_target,
                        "failure probability for the c estimator")
            ->capture_default_str();
        sub->add_option("--mode", z_mode, "poisson or fixed vertex count")
            ->check(CLI::IsMember({"poisson", "fixed"}))
            ->capture_default_str();
        sub->add_option("--workers", z_workers, "threads")->capture_default_str();
    };
    auto build_catalog = [&](SampledInstance& inst, rhg::LayerDecomposition& layers,
                             rhg::ZoneCatalog& cat) {
        inst = sample_and_build(z_alpha, z_nu, z_n, z_seed, z_mode, z_workers, "bucketed");
        rhg::LayerOptions lopts;
        lopts.base_offset = z_base;
        lopts.spacing = z_spacing;
        layers = rhg::decompose_layers(inst.graph.points, inst.graph.R, z_alpha, lopts);
        cat = rhg::build_zone_catalog(inst.graph, layers, inst.params, z_c, z_target,
                                      z_workers);
    };

    auto* zones = app.add_subcommand("zones", "build the separation-zone catalog");
    add_zone_flags(zones);
    zones->add_option("--out", z_out, "catalog JSON path")->capture_default_str();
    zones->callback([&]() {
        SampledInstance inst;
        rhg::LayerDecomposition layers;
        rhg::ZoneCatalog cat;
        build_catalog(inst, layers, cat);
        rhg::write_text_file(z_out, rhg::catalog_to_json(cat));
    });

    auto* cover = app.add_subcommand("cover", "covering-component reports for all roots");
    add_zone_flags(cover);
    cover->add_option("--out", cov_out, "report JSONL path")->capture_default_str();
    cover->add_option("--summary", cov_summary, "optional summary JSON path");
    cover->callback([&]() {
        SampledInstance inst;
        rhg::LayerDecomposition layers;
        rhg::ZoneCatalog cat;
        build_catalog(inst, layers, cat);
        if (!cat.separation_event)
            throw rhg::parameter_error(
                "the separation event does not hold on this instance; covers are only "
                "defined under it (try another seed or a larger c)");
        const rhg::Components comps = rhg::connected_components(inst.graph);
        const rhg::InstanceCoverResult res =
            rhg::cover_max_t_roots(inst.graph, layers, cat, comps);
        rhg::write_text_file(cov_out, rhg::cover_reports_to_jsonl(res.reports));
        if (!cov_summary.empty())
            rhg::write_text_file(cov_summary, rhg::cover_summary_to_json(res));
    });

    // scaling
    std::string s_alphas = "1.2,1.5,2.0", s_grid = "4096:1048576:x2", s_out = "scaling.csv",
                s_fit_out;
    std::size_t s_seeds = 50;
    double s_nu = 1.0;
    std::uint64_t s_seed = 1;
    unsigned s_workers = 1;
    auto* scaling = app.add_subcommand("scaling", "largest-component scaling experiment");
    scaling->add_option("--alphas", s_alphas, "comma list of exponents")->capture_default_str();
    scaling->add_option("--n-grid", s_grid, "comma list or start:end:xfactor sweep")
        ->capture_default_str();
    scaling->add_option("--seeds", s_seeds, "replicates per cell")->capture_default_str();
    scaling->add_option("--nu", s_nu, "intensity scale")->capture_default_str();
    scaling->add_option("--seed", s_seed, "master seed for the replicate schedule")
        ->capture_default_str();
    scaling->add_option("--workers", s_workers, "threads")->capture_default_str();
    scaling->add_option("--out", s_out, "per-replicate CSV path")->capture_default_str();
    scaling->add_option("--fit-out", s_fit_out, "optional fit JSON path");
    scaling->callback([&]() {
        const rhg::ScalingResult res = rhg::run_scaling_experiment(
            parse_list(s_alphas), parse_n_grid(s_grid), s_seeds, s_nu, s_seed, s_workers);
        rhg::write_text_file(s_out, rhg::scaling_to_csv(res.replicates));
        if (!s_fit_out.empty())
            rhg::write_text_file(s_fit_out, rhg::scaling_fit_to_json(res));
    });

    // verify
    rhg::VerifyOptions v_opts;
    auto* verify = app.add_subcommand("verify", "run the self-check suite");
    verify->add_option("--seed", v_opts.seed, "master seed")->capture_default_str();
    verify->add_option("--workers", v_opts.workers, "threads")->capture_default_str();
    verify->add_option("--out-dir", v_opts.out_dir, "directory for canonical output files")
        ->capture_default_str();
    verify->callback([&]() {
        exit_code = rhg::run_verify_suite(v_opts, std::cout, std::cerr) ? 0 : 1;
    });

    // render
    std::string r_in_v, r_in_e, r_out = "fig.svg";
    double r_radius = 0, r_n = 0, r_nu = 1.0, r_width = 1000.0;
    auto* render = app.add_subcommand("render", "draw a stored realization as SVG");
    render->add_option("--in-vertices", r_in_v, "vertex CSV path")->required();
    render->add_option("--in-edges", r_in_e, "edge CSV path")->required();
    render->add_option("--out", r_out, "SVG path")->capture_default_str();
    render->add_option("--radius", r_radius, "disk radius; alternative to --n/--nu");
    render->add_option("--n", r_n, "expected vertex count, sets the radius");
    render->add_option("--nu", r_nu, "intensity scale")->capture_default_str();
    render->add_option("--width", r_width, "page size in pixels")->capture_default_str();
    render->callback([&]() {
        const auto points = rhg::parse_vertices_csv(rhg::read_text_file(r_in_v));
        const auto edges = rhg::parse_edges_csv(rhg::read_text_file(r_in_e));
        double R = r_radius;
        if (!(R > 0.0)) {
            if (!(r_n > 0.0) || !(r_nu > 0.0) || !(r_n > r_nu))
                throw rhg::parameter_error("rendering needs --radius, or --n and --nu");
            R = 2.0 * std::log(r_n / r_nu);
        }
        for (const auto& p : points)
            if (p.t > R)
                throw rhg::parameter_error("vertex depth exceeds the stated radius");
        const rhg::GeometricGraph g = rhg::graph_from_edges(points, edges, R);
        rhg::RenderOptions ropts;
        ropts.width = r_width;
        rhg::write_text_file(r_out, rhg::render_svg(g, rhg::connected_components(g), ropts));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const rhg::resource_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
