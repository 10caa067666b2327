#include "rhg/svg.hpp"

#include <cmath>

#include "rhg/errors.hpp"
#include "rhg/io.hpp"

namespace rhg {

std::string render_svg(const GeometricGraph& g, const Components& comps,
                       const RenderOptions& opts) {
    if (g.num_vertices() > opts.max_vertices)
        throw resource_error("render capped at " + std::to_string(opts.max_vertices) +
                             " vertices");
    if (!(g.R > 0.0)) throw parameter_error("rendering needs a positive disk radius");

    const double w = opts.width;
    const double margin = 0.04 * w;
    const double scale = (w / 2.0 - margin) / g.R;
    const double c = w / 2.0;
    const double unit = w / 1000.0; // stroke and marker sizes track the page size

    std::vector<double> xs(g.num_vertices()), ys(g.num_vertices());
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        const double r = (g.R - g.points[v].t) * scale;
        xs[v] = c + r * std::cos(g.points[v].theta);
        ys[v] = c - r * std::sin(g.points[v].theta);
    }

    std::vector<char> in_largest(g.num_vertices(), 0);
    if (comps.count() > 0)
        for (std::size_t i = comps.member_offsets[0]; i < comps.member_offsets[1]; ++i)
            in_largest[comps.members[i]] = 1;

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + format_double(w) +
           "\" height=\"" + format_double(w) + "\" viewBox=\"0 0 " + format_double(w) + " " +
           format_double(w) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    out += "<circle cx=\"" + format_double(c) + "\" cy=\"" + format_double(c) + "\" r=\"" +
           format_double(g.R * scale) + "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"" +
           format_double(1.2 * unit) + "\"/>\n";
    out += "<circle cx=\"" + format_double(c) + "\" cy=\"" + format_double(c) + "\" r=\"" +
           format_double(g.R / 2.0 * scale) +
           "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"" + format_double(unit) +
           "\" stroke-dasharray=\"" + format_double(6.0 * unit) + " " +
           format_double(4.0 * unit) + "\"/>\n";

    auto emit_edge = [&](const Edge& e, const char* color, double sw) {
        out += "<line x1=\"" + format_double(xs[e.first]) + "\" y1=\"" +
               format_double(ys[e.first]) + "\" x2=\"" + format_double(xs[e.second]) +
               "\" y2=\"" + format_double(ys[e.second]) + "\" stroke=\"" + color +
               "\" stroke-width=\"" + format_double(sw) + "\"/>\n";
    };
    for (const Edge& e : g.edges)
        if (!in_largest[e.first]) emit_edge(e, "#9999aa", 0.7 * unit);
    for (const Edge& e : g.edges)
        if (in_largest[e.first]) emit_edge(e, "#c2410c", 1.1 * unit);

    auto emit_vertex = [&](std::size_t v, const char* color, double r) {
        out += "<circle cx=\"" + format_double(xs[v]) + "\" cy=\"" + format_double(ys[v]) +
               "\" r=\"" + format_double(r) + "\" fill=\"" + color + "\"/>\n";
    };
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
        if (!in_largest[v]) emit_vertex(v, "#222233", 2.0 * unit);
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
        if (in_largest[v]) emit_vertex(v, "#c2410c", 2.5 * unit);

    out += "</svg>\n";
    return out;
}

} // namespace rhg
