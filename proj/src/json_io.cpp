#include "cliquemin/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cliquemin {

Graph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("graph json must have \"n\" and \"edges\"");
  const int n = j.at("n").get<int>();
  Graph g(n);
  std::set<std::pair<int, int>> seen;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("each edge must be a pair [u, v]");
    int u = e.at(0).get<int>(), v = e.at(1).get<int>();
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) throw std::invalid_argument("duplicate edge in graph json");
    g.add_edge(u, v);
  }
  if (j.contains("labels")) g.set_labels(j.at("labels").get<std::vector<std::string>>());
  return g;
}

Json graph_to_json(const Graph& g) {
  Json j;
  j["n"] = g.vertex_count();
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
  j["edges"] = std::move(edges);
  if (g.has_labels()) j["labels"] = g.labels();
  return j;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

Graph load_graph(const std::string& path) { return graph_from_json(load_json(path)); }

Weighting weighting_from_json(const Json& j, int expected_n) {
  if (!j.is_object() || !j.contains("weights"))
    throw std::invalid_argument("weighting json must have \"weights\"");
  auto values = j.at("weights").get<std::vector<long long>>();
  if (expected_n >= 0 && static_cast<int>(values.size()) != expected_n)
    throw std::invalid_argument("weighting length does not match the graph");
  return Weighting(std::move(values));
}

Json weighting_to_json(const Weighting& w) {
  Json j;
  j["weights"] = w.values();
  return j;
}

std::vector<long long> parse_csv_longs(const std::string& text) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    long long value = std::stoll(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("bad integer in list: " + item);
    out.push_back(value);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

VertexSet parse_csv_vertices(const std::string& text) {
  VertexSet out;
  for (long long v : parse_csv_longs(text)) out.push_back(static_cast<int>(v));
  return out;
}

std::vector<int> parse_csv_sizes(const std::string& text) {
  std::vector<int> out;
  for (long long v : parse_csv_longs(text)) out.push_back(static_cast<int>(v));
  return out;
}

ShiftSpecFile shift_spec_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("A") || !j.contains("B"))
    throw std::invalid_argument("shift spec json must have \"A\" and \"B\"");
  ShiftSpecFile out;
  out.spec.a_list = j.at("A").get<VertexSet>();
  out.spec.b_list = j.at("B").get<VertexSet>();
  if (j.contains("mode")) out.mode = parse_shift_mode(j.at("mode").get<std::string>());
  return out;
}

Json shift_spec_to_json(const ShiftSpec& spec, ShiftMode mode) {
  Json j;
  j["A"] = spec.a_list;
  j["B"] = spec.b_list;
  j["mode"] = shift_mode_name(mode);
  return j;
}

Json validation_to_json(const ShiftValidation& v) {
  Json j;
  j["mode"] = shift_mode_name(v.mode);
  j["cond_edges"] = v.cond_edges;
  j["cond_b_set"] = v.cond_b_set;
  j["cond_neighborhood"] = v.cond_neighborhood;
  j["a_independent"] = v.a_independent;
  j["valid"] = v.valid();
  Json witnesses = Json::array();
  for (const auto& w : v.witness_failures) {
    Json item;
    item["condition"] = w.condition;
    item["pair"] = w.pair_index;
    item["vertex"] = w.vertex;
    witnesses.push_back(std::move(item));
  }
  j["witness_failures"] = std::move(witnesses);
  return j;
}

Json certificate_to_json(const InjectionCertificate& cert) {
  Json j;
  j["shifted"] = weighting_to_json(cert.shifted);
  j["phi_bijective"] = cert.phi_bijective;
  j["images_are_cliques"] = cert.images_are_cliques;
  j["clique_map_injective"] = cert.clique_map_injective;
  j["cliques_before"] = to_string(cert.cliques_before);
  j["cliques_after"] = to_string(cert.cliques_after);
  j["ok"] = cert.ok();
  Json map = Json::array();
  for (const auto& [from, to] : cert.vertex_map)
    map.push_back(Json::array(
        {Json::array({from.first, from.second}), Json::array({to.first, to.second})}));
  j["phi"] = std::move(map);
  return j;
}

Json report_to_json(const VerificationReport& report) {
  Json j;
  j["claim"] = report.claim;
  Json instance = Json::object();
  for (const auto& [key, value] : report.instance) instance[key] = value;
  j["instance"] = std::move(instance);
  Json values = Json::object();
  for (const auto& [key, value] : report.values) values[key] = to_string(value);
  j["values"] = std::move(values);
  j["verdict"] = verdict_name(report.verdict);
  j["details"] = report.details;
  return j;
}

Json trace_to_json(const ShiftTrace& trace) {
  Json j;
  j["k"] = trace.k;
  j["start"] = weighting_to_json(trace.start);
  j["final"] = weighting_to_json(trace.final_weighting);
  j["final_value"] = to_string(trace.final_value);
  Json steps = Json::array();
  for (const auto& step : trace.steps) {
    Json s;
    s["kind"] = step.kind == TraceStep::Kind::Shift ? "shift" : "rebalance";
    if (step.kind == TraceStep::Kind::Shift) {
      s["A"] = step.spec.a_list;
      s["B"] = step.spec.b_list;
    }
    s["note"] = step.note;
    s["before"] = to_string(step.value_before);
    s["after"] = to_string(step.value_after);
    s["weights"] = step.after.values();
    steps.push_back(std::move(s));
  }
  j["steps"] = std::move(steps);
  return j;
}

Json search_result_to_json(const SearchResult& result) {
  Json j;
  j["min"] = to_string(result.min_value);
  Json minimizers = Json::array();
  for (const auto& w : result.minimizers) minimizers.push_back(w.values());
  j["minimizers"] = std::move(minimizers);
  j["minimizer_count"] = result.minimizer_count;
  j["minimizer_cap"] = result.cap;
  j["visited"] = result.visited;
  return j;
}

Json sweep_report_to_json(const SweepReport& report) {
  Json j;
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    Json r;
    r["graph_hash"] = row.graph_hash;
    r["n"] = row.n;
    r["edges"] = row.edge_count;
    r["m"] = row.m;
    r["k"] = row.k;
    r["skipped"] = row.skipped;
    if (row.skipped) {
      r["skip_reason"] = row.skip_reason;
    } else {
      r["min"] = to_string(row.min_value);
      r["visited"] = row.visited;
      r["conjecture_ok"] = row.conjecture_ok;
      r["uniform_alpha_minimal"] = row.uniform_alpha_minimal;
    }
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  j["violations"] = report.violations;
  j["non_uniform_alpha_count"] = report.non_uniform_alpha_count;
  j["skipped"] = report.skipped;
  return j;
}

std::string sweep_report_to_csv(const SweepReport& report) {
  std::ostringstream out;
  out << "graph_hash,n,edges,m,k,skipped,skip_reason,min,visited,conjecture_ok,"
         "uniform_alpha_minimal\n";
  for (const auto& row : report.rows) {
    out << row.graph_hash << ',' << row.n << ',' << row.edge_count << ',' << row.m << ','
        << row.k << ',' << (row.skipped ? 1 : 0) << ',' << row.skip_reason << ',';
    if (row.skipped)
      out << ",,,";
    else
      out << to_string(row.min_value) << ',' << row.visited << ',' << (row.conjecture_ok ? 1 : 0)
          << ',' << (row.uniform_alpha_minimal ? 1 : 0);
    out << '\n';
  }
  return out.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

}  // namespace cliquemin
