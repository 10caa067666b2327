#pragma once

#include <string>
#include <vector>

#include "rhg/analysis.hpp"
#include "rhg/cover.hpp"
#include "rhg/graph.hpp"
#include "rhg/params.hpp"
#include "rhg/zones.hpp"

namespace rhg {

// shortest representation that round-trips a double exactly
std::string format_double(double x);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

// vertices.csv: header id,t,theta; row index equals id equals angular rank
std::string vertices_to_csv(const std::vector<PolarPoint>& points);
std::vector<PolarPoint> parse_vertices_csv(const std::string& text);

// edges.csv: header u,v with u < v, lexicographically sorted
std::string edges_to_csv(const std::vector<Edge>& edges);
std::vector<Edge> parse_edges_csv(const std::string& text);

std::string graph_summary_to_json(const GeometricGraph& g, const ModelParams& params);
std::string catalog_to_json(const ZoneCatalog& cat);
std::string cover_report_to_json(const CoverReport& rep); // single line, no newline
std::string cover_reports_to_jsonl(const std::vector<CoverReport>& reports);
std::string cover_summary_to_json(const InstanceCoverResult& result);
std::string scaling_to_csv(const std::vector<ReplicateResult>& replicates);
std::string scaling_fit_to_json(const ScalingResult& result);

} // namespace rhg
