#include "doctest.h"

#include <cmath>
#include <string>
#include <vector>

#include "rhg/components.hpp"
#include "rhg/errors.hpp"
#include "rhg/graph.hpp"
#include "rhg/params.hpp"
#include "rhg/svg.hpp"

using namespace rhg;

namespace {

std::size_t count_of(const std::string& hay, const std::string& needle) {
    std::size_t n = 0, pos = 0;
    while ((pos = hay.find(needle, pos)) != std::string::npos) {
        ++n;
        pos += needle.size();
    }
    return n;
}

} // namespace

TEST_CASE("empty disk renders the frame and nothing else") {
    const GeometricGraph g = graph_from_edges({}, {}, 5.0);
    const Components comps = connected_components(g);
    const std::string svg = render_svg(g, comps);
    CHECK(svg.rfind("<svg xmlns=", 0) == 0);
    CHECK(svg.find("</svg>\n") == svg.size() - 7);
    CHECK(count_of(svg, "<rect") == 1);
    CHECK(count_of(svg, "<circle") == 2); // boundary plus dashed half-radius ring
    CHECK(count_of(svg, "<line") == 0);
    CHECK(svg.find("stroke-dasharray") != std::string::npos);
    CHECK(svg.find("#ffffff") != std::string::npos);
    CHECK(svg.find("#333333") != std::string::npos);
    CHECK(svg.find("#888888") != std::string::npos);
}

TEST_CASE("largest component is accented, the rest stays muted") {
    // two 2-vertex components; the min-member tie-break accents {0, 1}
    std::vector<PolarPoint> pts{{2.5, 0.0}, {2.5, 0.1}, {2.5, 3.0}, {2.5, 3.1}};
    const GeometricGraph g = graph_from_edges(pts, {{0, 1}, {2, 3}}, 5.0);
    const Components comps = connected_components(g);
    REQUIRE(comps.count() == 2);
    REQUIRE(comps.members[comps.member_offsets[0]] == 0);
    const std::string svg = render_svg(g, comps);
    CHECK(count_of(svg, "<circle") == 6); // frame 2, vertices 4
    CHECK(count_of(svg, "<line") == 2);
    CHECK(count_of(svg, "stroke=\"#c2410c\"") == 1);
    CHECK(count_of(svg, "stroke=\"#9999aa\"") == 1);
    CHECK(count_of(svg, "fill=\"#c2410c\"") == 2);
    CHECK(count_of(svg, "fill=\"#222233\"") == 2);
}

TEST_CASE("vertex placement: depth is distance from the rim, y grows upward") {
    // width 1000: margin 40, scale (500-40)/R, center 500
    std::vector<PolarPoint> pts{
        {0.0, 0.0},               // on the rim at angle 0
        {10.0, 1.234},            // at the disk center
        {5.0, kPi / 2.0},         // halfway up, straight above center
    };
    const GeometricGraph g = graph_from_edges(pts, {}, 10.0);
    const std::string svg = render_svg(g, connected_components(g));
    CHECK(svg.find("<circle cx=\"960\" cy=\"500\"") != std::string::npos);
    CHECK(svg.find("<circle cx=\"500\" cy=\"500\"") != std::string::npos);
    CHECK(svg.find("cy=\"270\"") != std::string::npos);
}

TEST_CASE("page width drives the header and proportions") {
    const GeometricGraph g = graph_from_edges({{1.0, 0.5}}, {}, 5.0);
    RenderOptions opts;
    opts.width = 500.0;
    const std::string svg = render_svg(g, connected_components(g), opts);
    CHECK(svg.find("width=\"500\" height=\"500\" viewBox=\"0 0 500 500\"") !=
          std::string::npos);
}

TEST_CASE("render refuses oversized graphs and degenerate disks") {
    std::vector<PolarPoint> pts;
    for (int i = 0; i < 11; ++i) pts.push_back({0.5, 0.1 * i});
    const GeometricGraph g = graph_from_edges(pts, {}, 5.0);
    RenderOptions tight;
    tight.max_vertices = 10;
    CHECK_THROWS_AS(render_svg(g, connected_components(g), tight), resource_error);
    CHECK(RenderOptions{}.max_vertices == 50000);

    const GeometricGraph flat = graph_from_edges({}, {}, 0.0);
    CHECK_THROWS_AS(render_svg(flat, connected_components(flat)), parameter_error);
    const GeometricGraph neg = graph_from_edges({}, {}, -1.0);
    CHECK_THROWS_AS(render_svg(neg, connected_components(neg)), parameter_error);
}
