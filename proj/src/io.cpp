#include "rhg/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "rhg/errors.hpp"

namespace rhg {

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char ch : s) {
        switch (ch) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(ch) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
                out += buf;
            } else {
                out += ch;
            }
        }
    }
    return out;
}

const char* json_bool(bool b) { return b ? "true" : "false"; }

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(',', start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

double parse_double(const std::string& s) {
    char* end = nullptr;
    const double x = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0')
        throw parameter_error("malformed number in CSV: '" + s + "'");
    return x;
}

std::uint64_t parse_uint(const std::string& s) {
    char* end = nullptr;
    const unsigned long long x = std::strtoull(s.c_str(), &end, 10);
    if (end == s.c_str() || *end != '\0' || s.find('-') != std::string::npos)
        throw parameter_error("malformed integer in CSV: '" + s + "'");
    return x;
}

// strips a trailing carriage return so files from other platforms parse too
std::string chomp(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

} // namespace

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parameter_error("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw parameter_error("failed writing '" + path + "'");
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parameter_error("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string vertices_to_csv(const std::vector<PolarPoint>& points) {
    std::string out = "id,t,theta\n";
    for (std::size_t i = 0; i < points.size(); ++i) {
        out += std::to_string(i);
        out += ',';
        out += format_double(points[i].t);
        out += ',';
        out += format_double(points[i].theta);
        out += '\n';
    }
    return out;
}

std::vector<PolarPoint> parse_vertices_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || chomp(line) != "id,t,theta")
        throw parameter_error("vertex CSV must start with header 'id,t,theta'");
    std::vector<PolarPoint> points;
    while (std::getline(in, line)) {
        line = chomp(line);
        if (line.empty()) continue;
        const auto cols = split_line(line);
        if (cols.size() != 3) throw parameter_error("vertex CSV rows need 3 columns");
        if (parse_uint(cols[0]) != points.size())
            throw parameter_error("vertex ids must be consecutive from 0");
        PolarPoint p;
        p.t = parse_double(cols[1]);
        p.theta = parse_double(cols[2]);
        if (!(p.t > 0.0) || !(p.theta >= 0.0) || !(p.theta < kTwoPi))
            throw parameter_error("vertex coordinates out of range at id " +
                                  std::to_string(points.size()));
        points.push_back(p);
    }
    return points;
}

std::string edges_to_csv(const std::vector<Edge>& edges) {
    std::string out = "u,v\n";
    for (const Edge& e : edges) {
        out += std::to_string(e.first);
        out += ',';
        out += std::to_string(e.second);
        out += '\n';
    }
    return out;
}

std::vector<Edge> parse_edges_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || chomp(line) != "u,v")
        throw parameter_error("edge CSV must start with header 'u,v'");
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        line = chomp(line);
        if (line.empty()) continue;
        const auto cols = split_line(line);
        if (cols.size() != 2) throw parameter_error("edge CSV rows need 2 columns");
        edges.emplace_back(static_cast<std::uint32_t>(parse_uint(cols[0])),
                           static_cast<std::uint32_t>(parse_uint(cols[1])));
    }
    return edges;
}

std::string graph_summary_to_json(const GeometricGraph& g, const ModelParams& params) {
    std::string out = "{";
    out += "\"n_vertices\":" + std::to_string(g.num_vertices());
    out += ",\"n_edges\":" + std::to_string(g.num_edges());
    out += ",\"mean_degree\":" + format_double(g.mean_degree());
    out += ",\"max_degree\":" + std::to_string(g.max_degree());
    out += ",\"params\":{";
    out += "\"alpha\":" + format_double(params.alpha);
    out += ",\"nu\":" + format_double(params.nu);
    out += ",\"n\":" + format_double(params.n);
    out += ",\"R\":" + format_double(params.radius());
    out += "},\"seed\":" + std::to_string(params.seed);
    out += "}\n";
    return out;
}

std::string catalog_to_json(const ZoneCatalog& cat) {
    std::string out = "{";
    out += "\"E_R\":";
    out += json_bool(cat.separation_event);
    out += ",\"c\":" + format_double(cat.c);
    out += ",\"constants\":{\"base_offset\":" + format_double(cat.base_offset);
    out += ",\"spacing\":" + format_double(cat.spacing);
    out += "},\"degenerate\":";
    out += json_bool(cat.degenerate);
    out += ",\"R\":" + format_double(cat.R);
    out += ",\"c_estimate_target\":" + format_double(cat.c_estimate_target);
    out += ",\"layers\":[";
    for (std::size_t i = 0; i < cat.layers.size(); ++i) {
        const LayerZones& lz = cat.layers[i];
        if (i) out += ',';
        out += "{\"i\":" + std::to_string(lz.i);
        out += ",\"t_level\":" + format_double(lz.t_level);
        out += ",\"theta_ii\":" + format_double(lz.theta_ii);
        out += ",\"k_max\":" + std::to_string(lz.k_max);
        out += ",\"ok\":";
        out += json_bool(lz.ok);
        out += ",\"diagnostic\":\"" + json_escape(lz.diagnostic) + "\"";
        out += ",\"c_estimate\":" + format_double(lz.c_estimate);
        out += ",\"zones\":[";
        for (std::size_t k = 0; k < lz.zones.size(); ++k) {
            const ZoneInfo& z = lz.zones[k];
            if (k) out += ',';
            out += "{\"k\":" + std::to_string(z.k);
            out += ",\"j\":" + std::to_string(z.j);
            out += ",\"theta_center\":" + format_double(z.theta_center);
            out += ",\"gap_to_next\":" + format_double(z.gap_to_next);
            out += ",\"found\":";
            out += json_bool(z.found);
            out += ",\"gap_ok\":";
            out += json_bool(z.gap_ok);
            out += '}';
        }
        out += "]}";
    }
    out += "]}\n";
    return out;
}

std::string cover_report_to_json(const CoverReport& rep) {
    std::string out = "{";
    out += "\"v\":" + std::to_string(rep.v);
    out += ",\"layer\":" + std::to_string(rep.layer);
    out += ",\"region\":" + std::to_string(rep.region);
    out += ",\"size_C_v\":" + std::to_string(rep.size_C_v);
    out += ",\"size_cover\":" + std::to_string(rep.size_cover);
    out += ",\"size_conn\":" + std::to_string(rep.size_conn);
    out += ",\"is_max_t_root\":";
    out += json_bool(rep.is_max_t_root);
    out += ",\"containment\":";
    out += json_bool(rep.containment);
    out += ",\"unlocatable\":";
    out += json_bool(rep.unlocatable);
    out += ",\"bound_rhs\":" + format_double(rep.bound_rhs);
    out += '}';
    return out;
}

std::string cover_reports_to_jsonl(const std::vector<CoverReport>& reports) {
    std::string out;
    for (const CoverReport& rep : reports) {
        out += cover_report_to_json(rep);
        out += '\n';
    }
    return out;
}

std::string cover_summary_to_json(const InstanceCoverResult& result) {
    std::size_t pass = 0, fail = 0, unlocatable = 0;
    std::vector<double> ratios;
    for (const CoverReport& rep : result.reports) {
        if (rep.unlocatable) {
            ++unlocatable;
            continue;
        }
        (rep.containment ? pass : fail) += 1;
        ratios.push_back(static_cast<double>(rep.size_cover) / rep.bound_rhs);
    }
    auto q = [&](double p) { return ratios.empty() ? 0.0 : quantile_type7(ratios, p); };
    std::string out = "{";
    out += "\"n_reports\":" + std::to_string(result.reports.size());
    out += ",\"n_containment_pass\":" + std::to_string(pass);
    out += ",\"n_containment_fail\":" + std::to_string(fail);
    out += ",\"n_unlocatable\":" + std::to_string(unlocatable);
    out += ",\"n_above_top_roots\":" + std::to_string(result.n_above_top_roots);
    out += ",\"max_conn\":" + std::to_string(result.max_conn);
    out += ",\"max_conn_reported\":" + std::to_string(result.max_conn_reported);
    out += ",\"max_cover\":" + std::to_string(result.max_cover);
    out += ",\"bound_ratio_quantiles\":{";
    out += "\"q0\":" + format_double(q(0.0));
    out += ",\"q25\":" + format_double(q(0.25));
    out += ",\"q50\":" + format_double(q(0.5));
    out += ",\"q75\":" + format_double(q(0.75));
    out += ",\"q90\":" + format_double(q(0.9));
    out += ",\"q100\":" + format_double(q(1.0));
    out += "}}\n";
    return out;
}

std::string scaling_to_csv(const std::vector<ReplicateResult>& replicates) {
    std::string out = "alpha,n,replicate,seed,n_vertices,n_edges,size_l1,size_l2,max_t\n";
    for (const ReplicateResult& r : replicates) {
        out += format_double(r.alpha);
        out += ',';
        out += format_double(r.n);
        out += ',';
        out += std::to_string(r.replicate);
        out += ',';
        out += std::to_string(r.seed);
        out += ',';
        out += std::to_string(r.n_vertices);
        out += ',';
        out += std::to_string(r.n_edges);
        out += ',';
        out += std::to_string(r.size_l1);
        out += ',';
        out += std::to_string(r.size_l2);
        out += ',';
        out += format_double(r.max_t);
        out += '\n';
    }
    return out;
}

std::string scaling_fit_to_json(const ScalingResult& result) {
    std::string out = "{\"cells\":[";
    for (std::size_t i = 0; i < result.cells.size(); ++i) {
        const ScalingCell& cell = result.cells[i];
        if (i) out += ',';
        out += "{\"alpha\":" + format_double(cell.alpha);
        out += ",\"n\":" + format_double(cell.n);
        out += ",\"seeds\":" + std::to_string(cell.seeds);
        out += ",\"median_l1\":" + format_double(cell.median_l1);
        out += ",\"q25_l1\":" + format_double(cell.q25_l1);
        out += ",\"q75_l1\":" + format_double(cell.q75_l1);
        out += '}';
    }
    out += "],\"fits\":[";
    for (std::size_t i = 0; i < result.fits.size(); ++i) {
        const ScalingFitLine& fit = result.fits[i];
        if (i) out += ',';
        out += "{\"alpha\":" + format_double(fit.alpha);
        out += ",\"slope\":" + format_double(fit.slope);
        out += ",\"intercept\":" + format_double(fit.intercept);
        out += ",\"target\":" + format_double(fit.target);
        out += ",\"residuals\":[";
        for (std::size_t r = 0; r < fit.residuals.size(); ++r) {
            if (r) out += ',';
            out += format_double(fit.residuals[r]);
        }
        out += "]}";
    }
    out += "]}\n";
    return out;
}

} // namespace rhg
