#include "cliquemin/verify.hpp"

#include <random>
#include <stdexcept>

#include "cliquemin/corpus.hpp"

namespace cliquemin {

namespace {

void echo_instance(VerificationReport& report, const Graph& g) {
  report.instance["graph_hash"] = graph_hash(g);
  report.instance["n"] = std::to_string(g.vertex_count());
}

}  // namespace

VerificationReport reproduce_counterexample1(int k, long long max_blowup) {
  if (k < 3) throw std::invalid_argument("counterexample needs k >= 3");
  VerificationReport report;
  report.claim = "counterexample1";
  report.instance["k"] = std::to_string(k);
  report.instance["m"] = std::to_string(3LL * k);

  Graph path = path_graph(3);
  Weighting uniform({k, k, k});
  Weighting shifted({2LL * k, 0, k});

  BigCount closed_uniform = 2 * binomial(2LL * k, k) - 1;
  BigCount closed_shifted = binomial(2LL * k, k) + 1;
  BigCount pi_uniform = count_cliques_formula(path, uniform, k);
  BigCount pi_shifted = count_cliques_formula(path, shifted, k);
  report.values["closed_uniform"] = closed_uniform;
  report.values["closed_shifted"] = closed_shifted;
  report.values["pi_uniform"] = pi_uniform;
  report.values["pi_shifted"] = pi_shifted;

  bool ok = pi_uniform == closed_uniform && pi_shifted == closed_shifted &&
            pi_shifted < pi_uniform;
  if (3LL * k <= max_blowup) {
    BigCount oracle_uniform = count_cliques_oracle(path, uniform, k, max_blowup);
    BigCount oracle_shifted = count_cliques_oracle(path, shifted, k, max_blowup);
    report.values["oracle_uniform"] = oracle_uniform;
    report.values["oracle_shifted"] = oracle_shifted;
    ok = ok && oracle_uniform == closed_uniform && oracle_shifted == closed_shifted;
  }
  report.verdict = ok ? VerificationReport::Verdict::Pass : VerificationReport::Verdict::Fail;
  report.details = "uniform weighting (k,k,k) vs endpoint-concentrated (2k,0,k)";
  return report;
}

VerificationReport reproduce_figure1() {
  VerificationReport report;
  report.claim = "figure1";

  Graph prism = prism_graph();
  Weighting unit({1, 1, 1, 1, 1, 1});
  // shift inner vertex 1 along a triangle edge, then along a matching edge
  Weighting tri = shift_edge(prism, unit, 1, 0);
  Weighting matching = shift_edge(prism, unit, 1, 4);
  report.instance["graph_hash"] = graph_hash(prism);

  const BigCount expected[3] = {2, 3, 4};
  const Weighting* weightings[3] = {&unit, &tri, &matching};
  const char* names[3] = {"a", "b", "c"};
  bool ok = true;
  for (int i = 0; i < 3; ++i) {
    BigCount formula = count_cliques_formula(prism, *weightings[i], 3);
    BigCount oracle = count_cliques_oracle(prism, *weightings[i], 3);
    report.values[std::string("pi_") + names[i]] = formula;
    report.values[std::string("oracle_") + names[i]] = oracle;
    ok = ok && formula == expected[i] && oracle == expected[i];
  }
  report.verdict = ok ? VerificationReport::Verdict::Pass : VerificationReport::Verdict::Fail;
  report.details = "triangle count sequence 2, 3, 4 under single-edge shifts of unit weights";
  return report;
}

VerificationReport reproduce_remark2_counts(long long m, int n) {
  if (n < 1 || m < 0) throw std::invalid_argument("need n >= 1 and m >= 0");
  VerificationReport report;
  report.claim = "remark2_counts";
  report.instance["m"] = std::to_string(m);
  report.instance["n"] = std::to_string(n);

  Graph g = edgeless_graph(n);
  VertexSet all(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) all[static_cast<size_t>(v)] = v;
  Weighting w = uniform_weighting(g, all, m);

  const long long floor_w = m / n;
  const long long r = m % n;
  long long floor_count = 0, ceil_count = 0;
  for (int v = 0; v < n; ++v) {
    if (w[v] == floor_w) ++floor_count;
    if (r > 0 && w[v] == floor_w + 1) ++ceil_count;
  }
  report.values["floor_count"] = floor_count;
  report.values["ceil_count"] = ceil_count;
  report.values["expected_floor_count"] = static_cast<long long>(n - r);
  report.values["expected_ceil_count"] = r;
  bool ok = floor_count == n - r && ceil_count == r && w.total() == m;
  report.verdict = ok ? VerificationReport::Verdict::Pass : VerificationReport::Verdict::Fail;
  report.details = "division-algorithm split of m over n vertices";
  return report;
}

std::vector<Weighting> canonical_starts(const Graph& g, long long m) {
  const int n = g.vertex_count();
  std::vector<Weighting> starts;
  VertexSet all(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) all[static_cast<size_t>(v)] = v;
  starts.push_back(uniform_weighting(g, all, m));  // balanced over everything
  if (n > 1 && m > 0) {
    std::vector<long long> concentrated(static_cast<size_t>(n), 0);
    concentrated.back() = m;
    starts.emplace_back(std::move(concentrated));
  }
  if (n > 1 && m > 1) {
    std::mt19937 rng(0xC11Cu ^ static_cast<unsigned>(m * 131 + n));
    std::vector<long long> random(static_cast<size_t>(n), 0);
    for (long long unit = 0; unit < m; ++unit)
      ++random[static_cast<size_t>(rng() % static_cast<unsigned>(n))];
    starts.emplace_back(std::move(random));
  }
  return starts;
}

VerificationReport verify_t3(const Graph& g, long long m, const SearchOptions& options) {
  VerificationReport report;
  report.claim = "t3";
  echo_instance(report, g);
  report.instance["m"] = std::to_string(m);

  SearchResult min = brute_force_min(g, m, 2, options);
  Weighting w_alpha = uniform_weighting(g, max_independent_set(g), m);
  BigCount pi_alpha = count_edges_formula(g, w_alpha);
  report.values["min"] = min.min_value;
  report.values["pi_uniform_alpha"] = pi_alpha;
  report.values["visited"] = static_cast<long long>(min.visited);
  report.verdict = pi_alpha == min.min_value ? VerificationReport::Verdict::Pass
                                             : VerificationReport::Verdict::Fail;
  report.details = "uniform-alpha weighting vs exact minimum edge count";
  return report;
}

VerificationReport verify_t4(int n, long long m, int k, const SearchOptions& options) {
  VerificationReport report;
  report.claim = "t4";
  report.instance["n"] = std::to_string(n);
  report.instance["m"] = std::to_string(m);
  report.instance["k"] = std::to_string(k);

  SpernerGraph b = build_sperner(n);
  SearchResult min = brute_force_min(b.graph, m, k, options);
  Weighting w_mid = uniform_weighting(b.graph, middle_level(b), m);
  BigCount pi_mid = count_cliques_formula(b.graph, w_mid, k);
  report.values["min"] = min.min_value;
  report.values["pi_middle_level"] = pi_mid;
  report.values["visited"] = static_cast<long long>(min.visited);

  // replay the structured minimizer from several starts
  bool traces_ok = true;
  int trace_index = 0;
  for (const Weighting& start : canonical_starts(b.graph, m)) {
    ShiftTrace trace = minimize_sperner(b, start, k);
    report.values["trace_final_" + std::to_string(trace_index++)] = trace.final_value;
    traces_ok = traces_ok && trace.final_value == min.min_value;
  }
  report.verdict = (pi_mid == min.min_value && traces_ok) ? VerificationReport::Verdict::Pass
                                                          : VerificationReport::Verdict::Fail;
  report.details = "middle-level weighting vs exact minimum, plus minimizer replays";
  return report;
}

VerificationReport verify_t5(const MultipartiteSpec& spec, long long m, int k,
                             const SearchOptions& options) {
  VerificationReport report;
  report.claim = "t5";
  Graph g = build_multipartite(spec);
  echo_instance(report, g);
  report.instance["m"] = std::to_string(m);
  report.instance["k"] = std::to_string(k);

  SearchResult min = brute_force_min(g, m, k, options);
  Weighting w_alpha = uniform_weighting(g, max_independent_set(g), m);
  BigCount pi_alpha = count_cliques_formula(g, w_alpha, k);
  report.values["min"] = min.min_value;
  report.values["pi_uniform_alpha"] = pi_alpha;

  bool traces_ok = true;
  int trace_index = 0;
  for (const Weighting& start : canonical_starts(g, m)) {
    ShiftTrace trace = minimize_multipartite(g, spec, start, k);
    report.values["trace_final_" + std::to_string(trace_index++)] = trace.final_value;
    traces_ok = traces_ok && trace.final_value == min.min_value;
  }
  report.verdict = (pi_alpha == min.min_value && traces_ok) ? VerificationReport::Verdict::Pass
                                                            : VerificationReport::Verdict::Fail;
  report.details = "uniform-alpha vs exact minimum on a complete multipartite graph";
  return report;
}

VerificationReport verify_t6(const Graph& g, long long m, int k, const SearchOptions& options) {
  VerificationReport report;
  report.claim = "t6";
  echo_instance(report, g);
  report.instance["m"] = std::to_string(m);
  report.instance["k"] = std::to_string(k);

  if (!is_chordal(g)) {
    report.verdict = VerificationReport::Verdict::HypothesesUnmet;
    report.details = "graph is not chordal";
    return report;
  }
  SearchResult min = brute_force_min(g, m, k, options);
  Weighting w_alpha = uniform_weighting(g, max_independent_set(g), m);
  BigCount pi_alpha = count_cliques_formula(g, w_alpha, k);
  report.values["min"] = min.min_value;
  report.values["pi_uniform_alpha"] = pi_alpha;

  bool traces_ok = true;
  int trace_index = 0;
  for (const Weighting& start : canonical_starts(g, m)) {
    ShiftTrace trace = minimize_chordal(g, start, k);
    report.values["trace_final_" + std::to_string(trace_index++)] = trace.final_value;
    traces_ok = traces_ok && trace.final_value == min.min_value;
  }
  report.verdict = (pi_alpha == min.min_value && traces_ok) ? VerificationReport::Verdict::Pass
                                                            : VerificationReport::Verdict::Fail;
  report.details = "uniform-alpha vs exact minimum on a chordal graph";
  return report;
}

VerificationReport verify_t8(int n, int k, long long m) {
  SpernerGraph b = build_sperner(n);
  VerificationReport report = strict_gap_check(b.graph, m, k);
  report.claim = "t8";
  report.instance["n"] = std::to_string(n);
  if (n < 2) {
    report.verdict = VerificationReport::Verdict::HypothesesUnmet;
    report.details += "; requires n >= 2";
  }
  return report;
}

VerificationReport verify_t9(const MultipartiteSpec& spec, int k, long long m) {
  Graph g = build_multipartite(spec);
  VerificationReport report = strict_gap_check(g, m, k);
  report.claim = "t9";
  const bool strictly_largest =
      spec.part_count() >= 2 && spec.sizes[0] > spec.sizes[1];
  if (!strictly_largest) {
    report.verdict = VerificationReport::Verdict::HypothesesUnmet;
    report.details += "; requires a strictly largest part";
  }
  return report;
}

VerificationReport verify_lemma1(int n, long long m, int k, const SearchOptions& options) {
  VerificationReport report;
  report.claim = "lemma1";
  report.instance["n"] = std::to_string(n);
  report.instance["m"] = std::to_string(m);
  report.instance["k"] = std::to_string(k);

  Graph g = edgeless_graph(n);
  SearchResult min = brute_force_min(g, m, k, options);
  Weighting w_alpha = uniform_weighting(g, max_independent_set(g), m);
  BigCount pi_alpha = count_cliques_formula(g, w_alpha, k);
  report.values["min"] = min.min_value;
  report.values["pi_uniform_alpha"] = pi_alpha;
  report.verdict = pi_alpha == min.min_value ? VerificationReport::Verdict::Pass
                                             : VerificationReport::Verdict::Fail;
  report.details = "balanced weighting vs exact minimum on an edgeless graph";
  return report;
}

namespace {

std::string weights_csv(const Weighting& w) {
  std::string out;
  for (int v = 0; v < w.size(); ++v) {
    if (v) out += ",";
    out += std::to_string(w[v]);
  }
  return out;
}

}  // namespace

VerificationReport verify_lemma2(const Graph& g, const Weighting& w, int k) {
  VerificationReport report;
  report.claim = "lemma2";
  echo_instance(report, g);
  report.instance["weights"] = weights_csv(w);
  report.instance["m"] = std::to_string(w.total());
  report.instance["k"] = std::to_string(k);

  if (!is_independent_mask(g, w.support_mask())) {
    report.verdict = VerificationReport::Verdict::HypothesesUnmet;
    report.details = "weighting support is not an independent set";
    return report;
  }
  Weighting w_prime = uniform_weighting(g, max_independent_set(g), w.total());
  BigCount pi_w = count_cliques_formula(g, w, k);
  BigCount pi_prime = count_cliques_formula(g, w_prime, k);
  report.values["pi_w"] = pi_w;
  report.values["pi_uniform_max_independent"] = pi_prime;
  report.verdict = pi_prime <= pi_w ? VerificationReport::Verdict::Pass
                                    : VerificationReport::Verdict::Fail;
  report.details = "uniform weighting on a maximum independent set vs the given weighting";
  return report;
}

VerificationReport verify_lemma3(const Graph& g, const Weighting& w, const ShiftSpec& spec,
                                 ShiftMode mode, int k, long long max_blowup) {
  VerificationReport report;
  report.claim = "lemma3";
  echo_instance(report, g);
  report.instance["weights"] = weights_csv(w);
  report.instance["m"] = std::to_string(w.total());
  report.instance["k"] = std::to_string(k);
  report.instance["mode"] = shift_mode_name(mode);

  ShiftValidation validation = validate_shift(g, w, spec, mode);
  if (!validation.valid()) {
    report.verdict = VerificationReport::Verdict::HypothesesUnmet;
    report.details = "shift spec fails validation (" +
                     std::to_string(validation.witness_failures.size()) + " witness(es))";
    return report;
  }
  Weighting shifted = multi_shift(g, w, spec, mode);
  BigCount before = count_cliques_formula(g, w, k);
  BigCount after = count_cliques_formula(g, shifted, k);
  report.values["pi_before"] = before;
  report.values["pi_after"] = after;

  bool ok = after <= before;
  if (w.total() <= max_blowup) {
    InjectionCertificate cert = build_injection_certificate(g, w, spec, k, mode, max_blowup);
    report.values["certificate_before"] = cert.cliques_before;
    report.values["certificate_after"] = cert.cliques_after;
    ok = ok && cert.ok() && cert.cliques_before == before && cert.cliques_after == after;
    report.details = cert.ok() ? "certificate verified (bijective, clique-preserving, injective)"
                               : "certificate verification failed";
  } else {
    report.details = "count comparison only (blow-up over certificate budget)";
  }
  report.verdict = ok ? VerificationReport::Verdict::Pass : VerificationReport::Verdict::Fail;
  return report;
}

VerificationReport verify_lemma8(int n, int r, LevelDirection direction) {
  VerificationReport report;
  report.claim = "lemma8";
  report.instance["n"] = std::to_string(n);
  report.instance["r"] = std::to_string(r);
  report.instance["direction"] = level_direction_name(direction);

  SpernerGraph b = build_sperner(n);
  LevelMatching matching = hall_level_matching(b, r, direction);
  const auto level_size = static_cast<long long>(b.level_vertices(r).size());
  report.values["level_size"] = level_size;
  report.values["matched"] = static_cast<long long>(matching.pairs.size());

  bool ok = static_cast<long long>(matching.pairs.size()) == level_size;
  for (auto [src, dst] : matching.pairs) {
    std::uint32_t x = b.mask[static_cast<size_t>(src)], y = b.mask[static_cast<size_t>(dst)];
    bool nested = direction == LevelDirection::Up ? (x & y) == x : (x & y) == y;
    ok = ok && nested && x != y;
  }
  report.verdict = ok ? VerificationReport::Verdict::Pass : VerificationReport::Verdict::Fail;
  report.details = "containment matching saturates the source level";
  return report;
}

}  // namespace cliquemin
