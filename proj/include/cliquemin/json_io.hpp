#ifndef CLIQUEMIN_JSON_IO_HPP
#define CLIQUEMIN_JSON_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "cliquemin/graph.hpp"
#include "cliquemin/report.hpp"
#include "cliquemin/search.hpp"
#include "cliquemin/shift.hpp"

namespace cliquemin {

using Json = nlohmann::json;

// Graph file format: { "n": int, "edges": [[u,v],...], "labels": [str,...]? }.
// Edges are validated as simple (in range, no loops, no duplicates).
Graph graph_from_json(const Json& j);
Json graph_to_json(const Graph& g);
Graph load_graph(const std::string& path);

// Weighting file format: { "weights": [int,...] }.
Weighting weighting_from_json(const Json& j, int expected_n);
Json weighting_to_json(const Weighting& w);

// Inline forms: "--weights 3,0,3" and "--a-list 0,1".
std::vector<long long> parse_csv_longs(const std::string& text);
VertexSet parse_csv_vertices(const std::string& text);
std::vector<int> parse_csv_sizes(const std::string& text);

// Shift spec file format: { "A": [v,...], "B": [v,...], "mode": "lemma3"|"lemma4" }.
struct ShiftSpecFile {
  ShiftSpec spec;
  ShiftMode mode = ShiftMode::Lemma3;
};
ShiftSpecFile shift_spec_from_json(const Json& j);
Json shift_spec_to_json(const ShiftSpec& spec, ShiftMode mode);

Json validation_to_json(const ShiftValidation& v);
Json certificate_to_json(const InjectionCertificate& cert);
Json report_to_json(const VerificationReport& report);
Json trace_to_json(const ShiftTrace& trace);
Json search_result_to_json(const SearchResult& result);
Json sweep_report_to_json(const SweepReport& report);
std::string sweep_report_to_csv(const SweepReport& report);

Json load_json(const std::string& path);
void write_text(const std::string& path, const std::string& text);

}  // namespace cliquemin

#endif  // CLIQUEMIN_JSON_IO_HPP
