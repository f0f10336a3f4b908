// Command-line front door: family constructors, weight shifting, exact
// minimization, built-in verification checks and conjecture sweeps.
// Exit codes: 0 = pass, 1 = verification failure, 2 = usage/input error
// (including unmet hypotheses and exceeded budgets).

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "cliquemin/corpus.hpp"
#include "cliquemin/json_io.hpp"
#include "cliquemin/search.hpp"
#include "cliquemin/verify.hpp"

namespace {

using namespace cliquemin;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

void emit(const Json& j, const std::string& out_path) {
  std::string text = j.dump(2) + "\n";
  if (!out_path.empty()) write_text(out_path, text);
  std::cout << text;
}

int emit_report(const VerificationReport& report, const std::string& out_path) {
  emit(report_to_json(report), out_path);
  switch (report.verdict) {
    case VerificationReport::Verdict::Pass:
      return kExitPass;
    case VerificationReport::Verdict::Fail:
      return kExitFail;
    case VerificationReport::Verdict::HypothesesUnmet:
      return kExitUsage;
  }
  return kExitFail;
}

struct GraphArgs {
  std::string graph_path;
  int n = 0;              // subset-lattice size, when set
  std::string sizes_csv;  // multipartite part sizes, when set
};

Json instance_echo(const Graph& g) {
  Json j;
  j["graph_hash"] = graph_hash(g);
  j["n"] = g.vertex_count();
  return j;
}

// The maximal partite sets of a complete multipartite graph are the
// connected components of its complement.
MultipartiteSpec recover_multipartite(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> part(static_cast<size_t>(n), -1);
  int parts = 0;
  for (int v = 0; v < n; ++v) {
    if (part[static_cast<size_t>(v)] >= 0) continue;
    std::vector<int> stack{v};
    part[static_cast<size_t>(v)] = parts;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int x = 0; x < n; ++x) {
        if (part[static_cast<size_t>(x)] < 0 && x != u && !g.has_edge(u, x)) {
          part[static_cast<size_t>(x)] = parts;
          stack.push_back(x);
        }
      }
    }
    ++parts;
  }
  for (int u = 0; u < n; ++u)
    for (int x = u + 1; x < n; ++x)
      if ((part[static_cast<size_t>(u)] == part[static_cast<size_t>(x)]) == g.has_edge(u, x))
        throw std::invalid_argument("graph is not complete multipartite");
  std::vector<int> sizes(static_cast<size_t>(parts), 0);
  for (int v = 0; v < n; ++v) ++sizes[static_cast<size_t>(part[static_cast<size_t>(v)])];
  return MultipartiteSpec::of(sizes);
}

int run_family(const std::string& kind, int n, const std::string& sizes_csv,
               const std::string& out_path) {
  Graph g;
  if (kind == "sperner") {
    g = build_sperner(n).graph;
  } else {
    g = build_multipartite(MultipartiteSpec::of(parse_csv_sizes(sizes_csv)));
  }
  emit(graph_to_json(g), out_path);
  return kExitPass;
}

int run_shift(const std::string& graph_path, const std::string& weights_csv,
              const std::string& spec_path, const std::string& a_csv, const std::string& b_csv,
              const std::string& mode_name, int k, const std::string& out_path) {
  Graph g = load_graph(graph_path);
  Weighting w(parse_csv_longs(weights_csv));
  if (w.size() != g.vertex_count())
    throw std::invalid_argument("weighting length does not match the graph");

  ShiftSpec spec;
  ShiftMode mode = parse_shift_mode(mode_name);
  if (!spec_path.empty()) {
    ShiftSpecFile file = shift_spec_from_json(load_json(spec_path));
    spec = file.spec;
    mode = file.mode;
  } else {
    if (!a_csv.empty()) spec.a_list = parse_csv_vertices(a_csv);
    if (!b_csv.empty()) spec.b_list = parse_csv_vertices(b_csv);
  }

  ShiftValidation validation = validate_shift(g, w, spec, mode);
  Json j;
  j["instance"] = instance_echo(g);
  j["instance"]["weights"] = w.values();
  j["instance"]["k"] = k;
  j["spec"] = shift_spec_to_json(spec, mode);
  j["validation"] = validation_to_json(validation);
  j["pi_before"] = to_string(count_cliques_formula(g, w, k));
  if (validation.valid()) {
    Weighting shifted = multi_shift(g, w, spec, mode);
    j["pi_after"] = to_string(count_cliques_formula(g, shifted, k));
    j["shifted"] = weighting_to_json(shifted);
  }
  emit(j, out_path);
  return validation.valid() ? kExitPass : kExitFail;
}

int run_minimize(const GraphArgs& graph_args, long long m, int k, const std::string& method,
                 const std::string& weights_csv, const std::string& out_path,
                 long long max_weightings) {
  std::optional<SpernerGraph> sperner;
  std::optional<MultipartiteSpec> parts;
  Graph g;
  if (method == "sperner") {
    if (graph_args.n == 0) throw std::invalid_argument("method sperner needs --n");
    sperner = build_sperner(graph_args.n);
    g = sperner->graph;
  } else if (!graph_args.sizes_csv.empty()) {
    parts = MultipartiteSpec::of(parse_csv_sizes(graph_args.sizes_csv));
    g = build_multipartite(*parts);
  } else if (!graph_args.graph_path.empty()) {
    g = load_graph(graph_args.graph_path);
  } else {
    throw std::invalid_argument("minimize needs --graph, --sizes or --n");
  }

  Weighting start;
  if (!weights_csv.empty()) {
    start = Weighting(parse_csv_longs(weights_csv));
    if (start.size() != g.vertex_count())
      throw std::invalid_argument("weighting length does not match the graph");
    if (m != 0 && m != start.total())
      throw std::invalid_argument("--m disagrees with the total of --weights");
    m = start.total();
  } else {
    VertexSet all(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) all[static_cast<size_t>(v)] = v;
    start = uniform_weighting(g, all, m);
  }

  Json j;
  j["instance"] = instance_echo(g);
  j["instance"]["m"] = m;
  j["instance"]["k"] = k;
  j["method"] = method;

  if (method == "brute") {
    SearchOptions options;
    options.max_weightings = max_weightings;
    SearchResult result = brute_force_min(g, m, k, options);
    Json r = search_result_to_json(result);
    for (auto& [key, value] : r.items()) j[key] = std::move(value);
    j["trace"] = Json::array();
  } else {
    ShiftTrace trace;
    if (method == "sperner") {
      trace = minimize_sperner(*sperner, start, k);
    } else if (method == "multipartite") {
      if (!parts) parts = recover_multipartite(g);
      if (!same_edges(g, build_multipartite(*parts)))
        throw std::invalid_argument(
            "graph is complete multipartite but not in the canonical layout "
            "(parts consecutive, largest first); rebuild it with `family multipartite`");
      trace = minimize_multipartite(g, *parts, start, k);
    } else if (method == "chordal") {
      trace = minimize_chordal(g, start, k);
    } else {
      throw std::invalid_argument("unknown method: " + method);
    }
    j["min"] = to_string(trace.final_value);
    j["minimizers"] = Json::array({trace.final_weighting.values()});
    j["visited"] = 0;
    Json t = trace_to_json(trace);
    j["trace"] = std::move(t["steps"]);
    j["start"] = std::move(t["start"]);
    j["final"] = std::move(t["final"]);
  }
  emit(j, out_path);
  return kExitPass;
}

int run_verify(const std::string& claim, const GraphArgs& graph_args, long long m, int k,
               const std::string& weights_csv, const std::string& a_csv, const std::string& b_csv,
               const std::string& spec_path, const std::string& mode_name, int level,
               const std::string& direction, const std::string& out_path,
               long long max_weightings, long long max_blowup) {
  SearchOptions options;
  options.max_weightings = max_weightings;

  auto need_graph = [&]() {
    if (graph_args.graph_path.empty())
      throw std::invalid_argument("claim " + claim + " needs --graph");
    return load_graph(graph_args.graph_path);
  };
  auto need_sizes = [&]() {
    if (graph_args.sizes_csv.empty())
      throw std::invalid_argument("claim " + claim + " needs --sizes");
    return MultipartiteSpec::of(parse_csv_sizes(graph_args.sizes_csv));
  };

  VerificationReport report;
  if (claim == "t3") {
    report = verify_t3(need_graph(), m, options);
  } else if (claim == "t4") {
    report = verify_t4(graph_args.n, m, k, options);
  } else if (claim == "t5") {
    report = verify_t5(need_sizes(), m, k, options);
  } else if (claim == "t6") {
    report = verify_t6(need_graph(), m, k, options);
  } else if (claim == "t8") {
    report = verify_t8(graph_args.n, k, m);
  } else if (claim == "t9") {
    report = verify_t9(need_sizes(), k, m);
  } else if (claim == "lemma1") {
    report = verify_lemma1(graph_args.n, m, k, options);
  } else if (claim == "lemma2") {
    Graph g = need_graph();
    report = verify_lemma2(g, Weighting(parse_csv_longs(weights_csv)), k);
  } else if (claim == "lemma3") {
    Graph g = need_graph();
    ShiftSpec spec;
    ShiftMode mode = parse_shift_mode(mode_name);
    if (!spec_path.empty()) {
      ShiftSpecFile file = shift_spec_from_json(load_json(spec_path));
      spec = file.spec;
      mode = file.mode;
    } else {
      spec.a_list = parse_csv_vertices(a_csv);
      spec.b_list = parse_csv_vertices(b_csv);
    }
    report = verify_lemma3(g, Weighting(parse_csv_longs(weights_csv)), spec, mode, k, max_blowup);
  } else if (claim == "lemma8") {
    report = verify_lemma8(graph_args.n, level, parse_level_direction(direction));
  } else {
    throw std::invalid_argument("unknown claim: " + claim);
  }
  return emit_report(report, out_path);
}

int run_reproduce(const std::string& claim, int k, long long m, int n,
                  const std::string& out_path, long long max_blowup) {
  VerificationReport report;
  if (claim == "counterexample1") {
    report = reproduce_counterexample1(k, max_blowup);
  } else if (claim == "figure1") {
    report = reproduce_figure1();
  } else if (claim == "remark2_counts") {
    report = reproduce_remark2_counts(m, n);
  } else {
    throw std::invalid_argument("unknown claim: " + claim);
  }
  return emit_report(report, out_path);
}

int run_sweep(const std::string& corpus_dir, const std::string& builtin, long long m_min,
              long long m_max, int k_min, int k_max, const std::string& format,
              const std::string& out_path, long long max_weightings) {
  std::vector<Graph> graphs;
  if (!builtin.empty()) {
    if (builtin == "connected4")
      graphs = all_connected_graphs_up_to(4);
    else if (builtin == "chordal4")
      graphs = all_chordal_graphs_up_to(4);
    else if (builtin == "graphs3")
      graphs = all_graphs_up_to(3);
    else
      throw std::invalid_argument("unknown builtin corpus: " + builtin);
  } else if (!corpus_dir.empty()) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(corpus_dir))
      if (entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& file : files) graphs.push_back(load_graph(file.string()));
  } else {
    throw std::invalid_argument("sweep needs --corpus or --builtin");
  }

  SweepOptions options;
  options.max_weightings = max_weightings;
  SweepReport report = conjecture_sweep(graphs, m_min, m_max, k_min, k_max, options);
  std::string text =
      format == "json" ? sweep_report_to_json(report).dump(2) + "\n" : sweep_report_to_csv(report);
  if (!out_path.empty()) write_text(out_path, text);
  std::cout << text;
  return report.violations == 0 ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact k-clique counting and minimization in weighted graph blow-ups"};
  app.require_subcommand(1);

  std::string graph_path, weights_csv, sizes_csv, spec_path, a_csv, b_csv;
  std::string out_path, format = "csv", mode_name = "lemma3", direction = "up";
  std::string method = "brute", builtin, corpus_dir, claim;
  int n = 0, k = 2, level = 0;
  long long m = 0, m_min = 1, m_max = 4;
  int k_min = 2, k_max = 3;
  long long max_weightings = 10'000'000, max_blowup = 25;

  auto* family = app.add_subcommand("family", "emit a named family graph as JSON");
  auto* family_sperner = family->add_subcommand("sperner", "subset-lattice graph on 2^n vertices");
  family_sperner->add_option("--n", n, "ground-set size (1..5)")->required();
  family_sperner->add_option("--out", out_path, "write JSON here as well");
  auto* family_multi = family->add_subcommand("multipartite", "complete multipartite graph");
  family_multi->add_option("--sizes", sizes_csv, "part sizes, e.g. 2,1")->required();
  family_multi->add_option("--out", out_path, "write JSON here as well");
  family->require_subcommand(1);

  auto* shift = app.add_subcommand("shift", "validate and apply a simultaneous weight shift");
  shift->add_option("--graph", graph_path, "graph JSON file")->required();
  shift->add_option("--weights", weights_csv, "weights, e.g. 3,0,3")->required();
  shift->add_option("--spec", spec_path, "shift spec JSON file");
  shift->add_option("--a-list", a_csv, "source vertices");
  shift->add_option("--b-list", b_csv, "target vertices, paired with --a-list");
  shift->add_option("--mode", mode_name, "lemma3 or lemma4");
  shift->add_option("--k", k, "clique size to report");
  shift->add_option("--out", out_path, "write the report here as well");

  auto* minimize = app.add_subcommand("minimize", "minimize the k-clique count over weightings");
  minimize->add_option("--graph", graph_path, "graph JSON file");
  minimize->add_option("--n", n, "subset-lattice size (method sperner)");
  minimize->add_option("--sizes", sizes_csv, "part sizes (method multipartite)");
  minimize->add_option("--m", m, "total weight");
  minimize->add_option("--k", k, "clique size")->required();
  minimize->add_option("--method", method, "brute | sperner | multipartite | chordal");
  minimize->add_option("--weights", weights_csv, "start weighting (structured methods)");
  minimize->add_option("--out", out_path, "write the report here as well");
  minimize->add_option("--max-weightings", max_weightings, "enumeration budget");

  auto* verify = app.add_subcommand("verify", "run a built-in verification check");
  verify->add_option("claim", claim,
                     "t3 | t4 | t5 | t6 | t8 | t9 | lemma1 | lemma2 | lemma3 | lemma8")
      ->required();
  verify->add_option("--graph", graph_path, "graph JSON file");
  verify->add_option("--n", n, "family size parameter");
  verify->add_option("--m", m, "total weight");
  verify->add_option("--k", k, "clique size");
  verify->add_option("--sizes", sizes_csv, "multipartite part sizes");
  verify->add_option("--weights", weights_csv, "weighting");
  verify->add_option("--a-list", a_csv, "shift sources");
  verify->add_option("--b-list", b_csv, "shift targets");
  verify->add_option("--spec", spec_path, "shift spec JSON file");
  verify->add_option("--mode", mode_name, "lemma3 or lemma4");
  verify->add_option("--r", level, "lattice level");
  verify->add_option("--direction", direction, "up or down");
  verify->add_option("--out", out_path, "write the report here as well");
  verify->add_option("--max-weightings", max_weightings, "enumeration budget");
  verify->add_option("--max-blowup", max_blowup, "explicit blow-up budget");

  auto* reproduce = app.add_subcommand("reproduce", "recompute a documented example");
  reproduce->add_option("claim", claim, "counterexample1 | figure1 | remark2_counts")->required();
  reproduce->add_option("--k", k, "clique size (counterexample1)");
  reproduce->add_option("--m", m, "total weight (remark2_counts)");
  reproduce->add_option("--n", n, "support size (remark2_counts)");
  reproduce->add_option("--out", out_path, "write the report here as well");
  reproduce->add_option("--max-blowup", max_blowup, "explicit blow-up budget");

  auto* sweep = app.add_subcommand("sweep", "conjecture sweep over a graph corpus");
  sweep->add_option("--corpus", corpus_dir, "directory of graph JSON files");
  sweep->add_option("--builtin", builtin, "connected4 | chordal4 | graphs3");
  sweep->add_option("--m-min", m_min, "smallest total weight");
  sweep->add_option("--m-max", m_max, "largest total weight");
  sweep->add_option("--k-min", k_min, "smallest clique size");
  sweep->add_option("--k-max", k_max, "largest clique size");
  sweep->add_option("--format", format, "csv or json");
  sweep->add_option("--out", out_path, "write the report here as well");
  sweep->add_option("--max-weightings", max_weightings, "per-instance enumeration budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (family->parsed())
      return run_family(family_sperner->parsed() ? "sperner" : "multipartite", n, sizes_csv,
                        out_path);
    if (shift->parsed())
      return run_shift(graph_path, weights_csv, spec_path, a_csv, b_csv, mode_name, k, out_path);
    if (minimize->parsed())
      return run_minimize({graph_path, n, sizes_csv}, m, k, method, weights_csv, out_path,
                          max_weightings);
    if (verify->parsed())
      return run_verify(claim, {graph_path, n, sizes_csv}, m, k, weights_csv, a_csv, b_csv,
                        spec_path, mode_name, level, direction, out_path, max_weightings,
                        max_blowup);
    if (reproduce->parsed()) return run_reproduce(claim, k, m, n, out_path, max_blowup);
    if (sweep->parsed())
      return run_sweep(corpus_dir, builtin, m_min, m_max, k_min, k_max, format, out_path,
                       max_weightings);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << " (required " << e.required.str() << ", budget "
              << e.budget.str() << ")\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
