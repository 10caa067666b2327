#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "rhg/errors.hpp"
#include "rhg/graph.hpp"
#include "rhg/io.hpp"
#include "rhg/params.hpp"

using namespace rhg;

namespace {

bool same_bits(double a, double b) {
    return std::memcmp(&a, &b, sizeof(double)) == 0;
}

} // namespace

TEST_CASE("doubles survive the text round trip bit for bit") {
    const double values[] = {0.1,     1.0 / 3.0, 1e-300, 5e-324, 0.0,
                             -0.0,    1e300,     kPi,    -17.25, 9007199254740993.0,
                             2.5e-17, 6.0};
    for (double x : values) {
        const std::string s = format_double(x);
        const double back = std::strtod(s.c_str(), nullptr);
        CHECK(same_bits(back, x));
    }
    // integral doubles print without an exponent or decorations
    CHECK(format_double(6.0) == "6");
    CHECK(format_double(1.5) == "1.5");
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(-0.0) == "-0");
}

TEST_CASE("vertex CSV: golden shape and lossless round trip") {
    const std::vector<PolarPoint> two{{1.5, 0.25}, {2.0, 6.0}};
    CHECK(vertices_to_csv(two) == "id,t,theta\n0,1.5,0.25\n1,2,6\n");

    std::vector<PolarPoint> awk{{kPi, 1.0 / 3.0}, {1e-17, 6.2831}, {0.1, 0.1}};
    // keep angular order for realism; the parser itself does not sort
    std::sort(awk.begin(), awk.end(),
              [](const PolarPoint& a, const PolarPoint& b) { return a.theta < b.theta; });
    const std::string text = vertices_to_csv(awk);
    const std::vector<PolarPoint> back = parse_vertices_csv(text);
    REQUIRE(back.size() == awk.size());
    for (std::size_t i = 0; i < awk.size(); ++i) {
        CHECK(same_bits(back[i].t, awk[i].t));
        CHECK(same_bits(back[i].theta, awk[i].theta));
    }

    // carriage returns and blank lines are tolerated
    std::string crlf;
    for (char ch : text) {
        if (ch == '\n') crlf += "\r\n";
        else crlf += ch;
    }
    crlf += "\r\n";
    const std::vector<PolarPoint> back2 = parse_vertices_csv(crlf);
    REQUIRE(back2.size() == awk.size());
    CHECK(same_bits(back2[0].t, awk[0].t));
}

TEST_CASE("vertex CSV rejects malformed input") {
    CHECK_THROWS_AS(parse_vertices_csv(""), parameter_error);
    CHECK_THROWS_AS(parse_vertices_csv("id,theta,t\n"), parameter_error);
    CHECK_THROWS_AS(parse_vertices_csv("id,t,theta\n1,1.0,2.0\n"), parameter_error);
    CHECK_THROWS_AS(parse_vertices_csv("id,t,theta\n0,1.0\n"), parameter_error);
    CHECK_THROWS_AS(parse_vertices_csv("id,t,theta\n0,1.0,2.0,9\n"), parameter_error);
    CHECK_THROWS_AS(parse_vertices_csv("id,t,theta\n0,abc,2.0\n"), parameter_error);
    CHECK_THROWS_AS(parse_vertices_csv("id,t,theta\n0,1.0x,2.0\n"), parameter_error);
    CHECK_THROWS_AS(parse_vertices_csv("id,t,theta\n0.5,1.0,2.0\n"), parameter_error);
    CHECK_THROWS_AS(parse_vertices_csv("id,t,theta\n0,0,2.0\n"), parameter_error);
    CHECK_THROWS_AS(parse_vertices_csv("id,t,theta\n0,-1.0,2.0\n"), parameter_error);
    CHECK_THROWS_AS(parse_vertices_csv("id,t,theta\n0,1.0,-0.5\n"), parameter_error);
    const std::string full_turn = "id,t,theta\n0,1.0," + format_double(kTwoPi) + "\n";
    CHECK_THROWS_AS(parse_vertices_csv(full_turn), parameter_error);
}

TEST_CASE("edge CSV: golden shape, round trip, rejection") {
    const std::vector<Edge> edges{{0, 2}, {1, 3}};
    const std::string text = edges_to_csv(edges);
    CHECK(text == "u,v\n0,2\n1,3\n");
    CHECK(parse_edges_csv(text) == edges);
    CHECK(parse_edges_csv("u,v\n").empty());

    CHECK_THROWS_AS(parse_edges_csv(""), parameter_error);
    CHECK_THROWS_AS(parse_edges_csv("v,u\n0,1\n"), parameter_error);
    CHECK_THROWS_AS(parse_edges_csv("u,v\n0\n"), parameter_error);
    CHECK_THROWS_AS(parse_edges_csv("u,v\n0,1,2\n"), parameter_error);
    CHECK_THROWS_AS(parse_edges_csv("u,v\n-1,2\n"), parameter_error);
    CHECK_THROWS_AS(parse_edges_csv("u,v\n0,two\n"), parameter_error);
}

TEST_CASE("graph summary JSON keeps its field order") {
    const std::vector<PolarPoint> pts{{1.0, 0.5}, {2.0, 1.5}, {1.0, 3.0}};
    const GeometricGraph g = graph_from_edges(pts, {{0, 1}}, 2.1972245773362196);
    ModelParams params;
    params.alpha = 1.5;
    params.nu = 1.0;
    params.n = 3.0;
    params.seed = 42;
    const std::string expected = std::string("{\"n_vertices\":3,\"n_edges\":1") +
                                 ",\"mean_degree\":" + format_double(g.mean_degree()) +
                                 ",\"max_degree\":1,\"params\":{\"alpha\":1.5,\"nu\":1," +
                                 "\"n\":3,\"R\":" + format_double(params.radius()) +
                                 "},\"seed\":42}\n";
    CHECK(graph_summary_to_json(g, params) == expected);
}

TEST_CASE("zone catalog JSON: golden single-layer document") {
    ZoneCatalog cat;
    cat.R = 20.0;
    cat.c = 10.0;
    cat.base_offset = 1.0;
    cat.spacing = 2.0;
    cat.degenerate = false;
    cat.separation_event = true;
    cat.c_estimate_target = 0.01;
    LayerZones lz;
    lz.i = 0;
    lz.t_level = 3.0;
    lz.theta_ii = 0.25;
    lz.k_max = 1;
    lz.ok = true;
    lz.c_estimate = 0.5;
    ZoneInfo z;
    z.k = 0;
    z.j = 2;
    z.theta_center = 1.5;
    z.gap_to_next = 0.0;
    z.found = true;
    z.gap_ok = true;
    lz.zones.push_back(z);
    cat.layers.push_back(lz);

    CHECK(catalog_to_json(cat) ==
          "{\"E_R\":true,\"c\":10,\"constants\":{\"base_offset\":1,\"spacing\":2},"
          "\"degenerate\":false,\"R\":20,\"c_estimate_target\":0.01,"
          "\"layers\":[{\"i\":0,\"t_level\":3,\"theta_ii\":0.25,\"k_max\":1,"
          "\"ok\":true,\"diagnostic\":\"\",\"c_estimate\":0.5,"
          "\"zones\":[{\"k\":0,\"j\":2,\"theta_center\":1.5,\"gap_to_next\":0,"
          "\"found\":true,\"gap_ok\":true}]}]}\n");

    // diagnostics are escaped as JSON strings
    cat.layers[0].diagnostic = "say \"hi\"\nnow";
    cat.layers[0].ok = false;
    const std::string doc = catalog_to_json(cat);
    CHECK(doc.find("say \\\"hi\\\"\\nnow") != std::string::npos);
    CHECK(doc.find("\"ok\":false") != std::string::npos);
}

TEST_CASE("cover reports serialize as one JSON line each") {
    CoverReport rep;
    rep.v = 7;
    rep.layer = 1;
    rep.region = 3;
    rep.size_C_v = 4;
    rep.size_cover = 9;
    rep.size_conn = 5;
    rep.is_max_t_root = true;
    rep.containment = true;
    rep.unlocatable = false;
    rep.bound_rhs = 2.5;
    const std::string line = cover_report_to_json(rep);
    CHECK(line ==
          "{\"v\":7,\"layer\":1,\"region\":3,\"size_C_v\":4,\"size_cover\":9,"
          "\"size_conn\":5,\"is_max_t_root\":true,\"containment\":true,"
          "\"unlocatable\":false,\"bound_rhs\":2.5}");

    CoverReport lost;
    lost.v = 2;
    lost.unlocatable = true; // region stays -1
    const std::string two = cover_reports_to_jsonl({rep, lost});
    CHECK(two == line + "\n" + cover_report_to_json(lost) + "\n");
    CHECK(cover_report_to_json(lost).find("\"region\":-1") != std::string::npos);
}

TEST_CASE("cover summary JSON: counts and bound-ratio quantiles") {
    InstanceCoverResult res;
    res.n_above_top_roots = 2;
    res.max_conn = 5;
    res.max_conn_reported = 4;
    res.max_cover = 9;
    CoverReport a;
    a.containment = true;
    a.size_cover = 1;
    a.bound_rhs = 2.0; // ratio 0.5
    CoverReport b;
    b.containment = false;
    b.size_cover = 3;
    b.bound_rhs = 2.0; // ratio 1.5
    CoverReport c;
    c.unlocatable = true;
    res.reports = {a, b, c};

    const double q90 = 0.5 + 0.9 * (1.5 - 0.5);
    CHECK(cover_summary_to_json(res) ==
          "{\"n_reports\":3,\"n_containment_pass\":1,\"n_containment_fail\":1,"
          "\"n_unlocatable\":1,\"n_above_top_roots\":2,\"max_conn\":5,"
          "\"max_conn_reported\":4,\"max_cover\":9,\"bound_ratio_quantiles\":{"
          "\"q0\":0.5,\"q25\":0.75,\"q50\":1,\"q75\":1.25,\"q90\":" +
              format_double(q90) + ",\"q100\":1.5}}\n");

    // no reports at all: quantiles degrade to zeros
    InstanceCoverResult none;
    const std::string empty_doc = cover_summary_to_json(none);
    CHECK(empty_doc.find("\"n_reports\":0") != std::string::npos);
    CHECK(empty_doc.find("\"q50\":0") != std::string::npos);
}

TEST_CASE("scaling CSV: exact header and rows, no timing leakage") {
    ReplicateResult r;
    r.alpha = 1.5;
    r.n = 1024.0;
    r.replicate = 3;
    r.seed = 77;
    r.n_vertices = 1000;
    r.n_edges = 1500;
    r.size_l1 = 12;
    r.size_l2 = 5;
    r.max_t = 7.5;
    r.wall_sample = 1.25; // diagnostic only, must never be serialized
    r.wall_build = 2.5;
    r.wall_components = 0.125;
    const std::string csv = scaling_to_csv({r});
    CHECK(csv ==
          "alpha,n,replicate,seed,n_vertices,n_edges,size_l1,size_l2,max_t\n"
          "1.5,1024,3,77,1000,1500,12,5,7.5\n");
    CHECK(csv.find("wall") == std::string::npos);
    CHECK(csv.find("1.25") == std::string::npos);
}

TEST_CASE("scaling fit JSON: cells and fits with residual arrays") {
    ScalingResult res;
    ScalingCell cell;
    cell.alpha = 2.0;
    cell.n = 256.0;
    cell.seeds = 30;
    cell.median_l1 = 10.0;
    cell.q25_l1 = 8.5;
    cell.q75_l1 = 12.0;
    res.cells.push_back(cell);
    ScalingFitLine fit;
    fit.alpha = 2.0;
    fit.slope = 0.25;
    fit.intercept = -1.5;
    fit.target = 0.25;
    fit.residuals = {0.125, -0.125};
    res.fits.push_back(fit);

    CHECK(scaling_fit_to_json(res) ==
          "{\"cells\":[{\"alpha\":2,\"n\":256,\"seeds\":30,\"median_l1\":10,"
          "\"q25_l1\":8.5,\"q75_l1\":12}],"
          "\"fits\":[{\"alpha\":2,\"slope\":0.25,\"intercept\":-1.5,"
          "\"target\":0.25,\"residuals\":[0.125,-0.125]}]}\n");
}

TEST_CASE("text files round trip binary-exact and fail loudly") {
    const std::string path = "io_test_scratch.txt";
    const std::string content = "line one\nline two\r\nraw\ttab\n";
    write_text_file(path, content);
    CHECK(read_text_file(path) == content);
    std::remove(path.c_str());

    CHECK_THROWS_AS(read_text_file("definitely/not/here.txt"), parameter_error);
    CHECK_THROWS_AS(write_text_file("no_dir_here/x.txt", "y"), parameter_error);
}
