#include "cliquemin/search.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace cliquemin {

namespace {

struct BruteForce {
  const Graph& g;
  const CliqueCounter& counter;
  const SearchOptions& options;
  SearchResult result;
  std::vector<long long> weights;
  bool have_best = false;

  // contribution of the cliques whose minimum vertex is v, under the
  // current (partially assigned) weights
  BigCount committed_at(int v) const {
    BigCount sum = 0;
    Weighting w(weights);  // vertices below v are still zero; fine, their
                           // cliques are not in this bucket
    for (const auto& clique : counter.cliques_with_min(v))
      sum += counter.clique_contribution(clique, w);
    return sum;
  }

  void assign(int v, long long remaining, const BigCount& committed) {
    if (v == 0) {
      weights[0] = remaining;
      BigCount total = committed + committed_at(0);
      ++result.visited;
      if (!have_best || total < result.min_value) {
        have_best = true;
        result.min_value = total;
        result.minimizers.clear();
        result.minimizer_count = 0;
      }
      if (total == result.min_value) {
        ++result.minimizer_count;
        if (static_cast<int>(result.minimizers.size()) < options.minimizer_cap)
          result.minimizers.emplace_back(weights);
      }
      weights[0] = 0;
      return;
    }
    for (long long x = 0; x <= remaining; ++x) {
      weights[static_cast<size_t>(v)] = x;
      BigCount next = committed + committed_at(v);
      // every clique not yet committed only adds to the total
      if (!have_best || next <= result.min_value) assign(v - 1, remaining - x, next);
      weights[static_cast<size_t>(v)] = 0;
    }
  }
};

}  // namespace

SearchResult brute_force_min(const Graph& g, long long m, int k, const SearchOptions& options) {
  if (m < 0) throw std::invalid_argument("total weight must be non-negative");
  const int n = g.vertex_count();
  if (n == 0) {
    if (m > 0) throw std::invalid_argument("cannot weight an empty graph");
    SearchResult empty;
    empty.min_value = 0;
    empty.minimizer_count = 1;
    empty.visited = 1;
    empty.minimizers.emplace_back(std::vector<long long>{});
    empty.cap = options.minimizer_cap;
    return empty;
  }
  BigCount space = binomial(m + n - 1, n - 1);
  if (space > options.max_weightings)
    throw BudgetExceeded("weak-composition enumeration budget exceeded", space,
                         options.max_weightings);

  CliqueCounter counter(g, k);
  BruteForce search{g, counter, options, {}, std::vector<long long>(static_cast<size_t>(n), 0)};
  search.result.cap = options.minimizer_cap;
  // assign from the last vertex down so the tuples come out in colex order
  search.assign(n - 1, m, 0);
  return search.result;
}

namespace {

void append_step(ShiftTrace& trace, const CliqueCounter& counter, TraceStep::Kind kind,
                 ShiftSpec spec, std::string note, const BigCount& before,
                 const Weighting& after) {
  TraceStep step;
  step.kind = kind;
  step.spec = std::move(spec);
  step.note = std::move(note);
  step.after = after;
  step.value_before = before;
  step.value_after = counter.count(after);
  if (step.value_after > step.value_before)
    throw std::logic_error("trace step increased the clique count: " + step.note);
  trace.steps.push_back(std::move(step));
}

const BigCount& current_value(const ShiftTrace& trace, const BigCount& start_value) {
  return trace.steps.empty() ? start_value : trace.steps.back().value_after;
}

}  // namespace

ShiftTrace minimize_sperner(const SpernerGraph& b, const Weighting& start, int k) {
  if (start.size() != b.graph.vertex_count())
    throw std::invalid_argument("weighting size does not match graph");
  CliqueCounter counter(b.graph, k);
  ShiftTrace trace;
  trace.k = k;
  trace.start = start;
  const BigCount start_value = counter.count(start);
  Weighting w = start;
  const int mid = (b.n + 1) / 2;

  auto occupied_levels = [&](const Weighting& current) {
    std::pair<int, int> range{b.n + 1, -1};
    for (int v = 0; v < current.size(); ++v) {
      if (current[v] == 0) continue;
      range.first = std::min(range.first, b.level[static_cast<size_t>(v)]);
      range.second = std::max(range.second, b.level[static_cast<size_t>(v)]);
    }
    return range;
  };

  // lift everything below the middle level, lowest level first
  for (;;) {
    auto [lo, hi] = occupied_levels(w);
    if (hi < 0 || lo >= mid) break;
    LevelMatching match = hall_level_matching(b, lo, LevelDirection::Up);
    ShiftSpec spec;
    for (auto [src, dst] : match.pairs) {
      spec.a_list.push_back(src);
      spec.b_list.push_back(dst);
    }
    Weighting next = multi_shift(b.graph, w, spec, ShiftMode::Lemma3);
    append_step(trace, counter, TraceStep::Kind::Shift, spec,
                "lift level " + std::to_string(lo) + " to " + std::to_string(lo + 1),
                current_value(trace, start_value), next);
    w = std::move(next);
  }
  // then lower everything above it, highest level first
  for (;;) {
    auto [lo, hi] = occupied_levels(w);
    if (hi < 0 || hi <= mid) break;
    LevelMatching match = hall_level_matching(b, hi, LevelDirection::Down);
    ShiftSpec spec;
    for (auto [src, dst] : match.pairs) {
      spec.a_list.push_back(src);
      spec.b_list.push_back(dst);
    }
    Weighting next = multi_shift(b.graph, w, spec, ShiftMode::Lemma3);
    append_step(trace, counter, TraceStep::Kind::Shift, spec,
                "lower level " + std::to_string(hi) + " to " + std::to_string(hi - 1),
                current_value(trace, start_value), next);
    w = std::move(next);
  }

  VertexSet mid_level = middle_level(b);
  if (!is_uniform_on(w, mid_level)) {
    Weighting target = uniform_weighting(b.graph, mid_level, w.total());
    append_step(trace, counter, TraceStep::Kind::Rebalance, {},
                "balance on level " + std::to_string(mid), current_value(trace, start_value),
                target);
    w = std::move(target);
  }

  trace.final_weighting = w;
  trace.final_value = current_value(trace, start_value);
  return trace;
}

ShiftTrace minimize_multipartite(const Graph& g, const MultipartiteSpec& spec,
                                 const Weighting& start, int k) {
  if (!same_edges(g, build_multipartite(spec)))
    throw std::invalid_argument("graph does not match the multipartite shape");
  if (start.size() != g.vertex_count())
    throw std::invalid_argument("weighting size does not match graph");
  CliqueCounter counter(g, k);
  ShiftTrace trace;
  trace.k = k;
  trace.start = start;
  const BigCount start_value = counter.count(start);
  Weighting w = start;

  auto highest_occupied_part = [&](const Weighting& current) {
    for (int j = spec.part_count(); j >= 1; --j)
      for (int v : spec.part_vertices(j))
        if (current[v] > 0) return j;
    return 0;
  };

  for (;;) {
    int s = highest_occupied_part(w);
    if (s <= 1) break;
    VertexSet from = spec.part_vertices(s);
    VertexSet prev = spec.part_vertices(s - 1);
    ShiftSpec shift;
    shift.a_list = from;
    shift.b_list.assign(prev.begin(), prev.begin() + from.size());
    Weighting next = multi_shift(g, w, shift, ShiftMode::Lemma3);
    append_step(trace, counter, TraceStep::Kind::Shift, shift,
                "merge part " + std::to_string(s) + " into part " + std::to_string(s - 1),
                current_value(trace, start_value), next);
    w = std::move(next);
  }

  VertexSet first_part = spec.part_vertices(1);
  if (!is_uniform_on(w, first_part)) {
    Weighting target = uniform_weighting(g, first_part, w.total());
    append_step(trace, counter, TraceStep::Kind::Rebalance, {}, "balance on part 1",
                current_value(trace, start_value), target);
    w = std::move(target);
  }

  trace.final_weighting = w;
  trace.final_value = current_value(trace, start_value);
  return trace;
}

ShiftTrace minimize_chordal(const Graph& g, const Weighting& start, int k) {
  if (!is_chordal(g)) throw std::invalid_argument("graph is not chordal");
  if (start.size() != g.vertex_count())
    throw std::invalid_argument("weighting size does not match graph");
  CliqueCounter counter(g, k);
  ShiftTrace trace;
  trace.k = k;
  trace.start = start;
  const BigCount start_value = counter.count(start);
  Weighting w = start;

  Mask active = g.vertex_mask();
  while (std::popcount(active) > 1) {
    // induced subgraph on the active vertices, with an index map back to g
    VertexSet vertices = mask_to_set(active);
    Graph h(static_cast<int>(vertices.size()));
    for (size_t p = 0; p < vertices.size(); ++p)
      for (size_t q = p + 1; q < vertices.size(); ++q)
        if (g.has_edge(vertices[p], vertices[q]))
          h.add_edge(static_cast<int>(p), static_cast<int>(q));
    if (h.edge_count() == 0) break;
    // induced subgraphs of chordal graphs are chordal
    EliminationOrdering peo = find_elimination_ordering(h).value();
    int v1 = vertices[static_cast<size_t>(peo.order[0])];
    if ((g.neighbors(v1) & active) == 0) {
      active &= ~(Mask{1} << v1);  // isolated: set aside, weight untouched
      continue;
    }
    int vh = -1;
    for (size_t i = 1; i < peo.order.size(); ++i) {
      int u = vertices[static_cast<size_t>(peo.order[i])];
      if (g.has_edge(v1, u)) {
        vh = u;
        break;
      }
    }
    ShiftSpec shift{{vh}, {v1}};
    Weighting next = multi_shift(g, w, shift, ShiftMode::Lemma3);
    append_step(trace, counter, TraceStep::Kind::Shift, shift,
                "shift vertex " + std::to_string(vh) + " onto " + std::to_string(v1),
                current_value(trace, start_value), next);
    w = std::move(next);
    active &= ~(Mask{1} << vh);
  }

  // land on the canonical maximum independent set; when w is already
  // uniform-alpha elsewhere the step keeps the count unchanged
  Weighting target = uniform_weighting(g, max_independent_set(g), w.total());
  if (!(w == target)) {
    append_step(trace, counter, TraceStep::Kind::Rebalance, {},
                "balance on a maximum independent set", current_value(trace, start_value),
                target);
    w = std::move(target);
  }

  trace.final_weighting = w;
  trace.final_value = current_value(trace, start_value);
  return trace;
}

VerificationReport strict_gap_check(const Graph& g, long long m, int k, long long max_blowup) {
  if (k < 2) throw std::invalid_argument("strict gap check needs k >= 2");
  VerificationReport report;
  report.claim = "strict_gap";
  report.instance["graph_hash"] = graph_hash(g);
  report.instance["n"] = std::to_string(g.vertex_count());
  report.instance["m"] = std::to_string(m);
  report.instance["k"] = std::to_string(k);

  VertexSet alpha_set = max_independent_set(g);
  VertexSet alpha_k_set = max_k_clique_independent_set(g, k);
  report.values["alpha"] = static_cast<long long>(alpha_set.size());
  report.values["alpha_k"] = static_cast<long long>(alpha_k_set.size());

  Weighting w_alpha = uniform_weighting(g, alpha_set, m);
  Weighting w_alpha_k = uniform_weighting(g, alpha_k_set, m);
  BigCount pi_alpha = count_cliques_formula(g, w_alpha, k);
  BigCount pi_alpha_k = count_cliques_formula(g, w_alpha_k, k);
  report.values["pi_uniform_alpha"] = pi_alpha;
  report.values["pi_uniform_alpha_k"] = pi_alpha_k;

  bool oracle_agrees = true;
  if (m <= max_blowup) {
    BigCount o1 = count_cliques_oracle(g, w_alpha, k, max_blowup);
    BigCount o2 = count_cliques_oracle(g, w_alpha_k, k, max_blowup);
    report.values["oracle_uniform_alpha"] = o1;
    report.values["oracle_uniform_alpha_k"] = o2;
    oracle_agrees = o1 == pi_alpha && o2 == pi_alpha_k;
  }

  const bool strict = pi_alpha < pi_alpha_k;
  const bool hypotheses =
      k >= 3 && m >= static_cast<long long>(k) * static_cast<long long>(alpha_k_set.size());
  report.details = std::string("strict inequality ") + (strict ? "holds" : "does not hold") +
                   "; k-clique independent set chosen by lexicographic tie-break";
  if (!hypotheses) {
    report.verdict = VerificationReport::Verdict::HypothesesUnmet;
    report.details += "; requires k >= 3 and m >= k * alpha_k";
  } else {
    report.verdict = strict && oracle_agrees ? VerificationReport::Verdict::Pass
                                             : VerificationReport::Verdict::Fail;
  }
  return report;
}

namespace {

// True iff some weighting uniform on some k-clique independent set attains
// `target`. A weighting uniform on such a set, restricted to its support,
// is uniform on the (still k-clique independent) support, so enumerating
// supports and ceil placements is exhaustive.
bool uniform_on_k_clique_free_attains(const Graph& g, long long m, int k,
                                      const BigCount& target) {
  const int n = g.vertex_count();
  CliqueCounter counter(g, k);
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    if (!is_k_clique_independent(g, s, k)) continue;
    VertexSet support = mask_to_set(s);
    const long long u = static_cast<long long>(support.size());
    const long long floor_w = m / u;
    const long long r = m % u;
    if (r == 0) {
      if (counter.count(uniform_weighting(g, support, m)) == target) return true;
      continue;
    }
    // every placement of the r ceil weights inside the support
    std::vector<int> pick(static_cast<size_t>(r));
    auto recurse = [&](auto&& self, int from, int need) -> bool {
      if (need == 0) {
        std::vector<long long> weights(static_cast<size_t>(n), 0);
        for (int v : support) weights[static_cast<size_t>(v)] = floor_w;
        for (int idx = 0; idx < r; ++idx)
          ++weights[static_cast<size_t>(pick[static_cast<size_t>(idx)])];
        return counter.count(Weighting(std::move(weights))) == target;
      }
      for (size_t i = static_cast<size_t>(from); i + static_cast<size_t>(need) <= support.size();
           ++i) {
        pick[static_cast<size_t>(r - need)] = support[i];
        if (self(self, static_cast<int>(i) + 1, need - 1)) return true;
      }
      return false;
    };
    if (recurse(recurse, 0, static_cast<int>(r))) return true;
  }
  return false;
}

}  // namespace

SweepReport conjecture_sweep(const std::vector<Graph>& graphs, long long m_min, long long m_max,
                             int k_min, int k_max, const SweepOptions& options) {
  SweepReport report;
  for (const Graph& g : graphs) {
    for (long long m = m_min; m <= m_max; ++m) {
      for (int k = std::max(k_min, 2); k <= k_max; ++k) {
        SweepRow row;
        row.graph_hash = graph_hash(g);
        row.n = g.vertex_count();
        row.edge_count = g.edge_count();
        row.m = m;
        row.k = k;
        if (g.vertex_count() > options.max_support_enum_vertices) {
          row.skipped = true;
          row.skip_reason = "support enumeration too large";
          ++report.skipped;
          report.rows.push_back(std::move(row));
          continue;
        }
        SearchOptions search_options;
        search_options.max_weightings = options.max_weightings;
        try {
          SearchResult min = brute_force_min(g, m, k, search_options);
          row.min_value = min.min_value;
          row.visited = min.visited;
          row.conjecture_ok = uniform_on_k_clique_free_attains(g, m, k, min.min_value);
          Weighting w_alpha = uniform_weighting(g, max_independent_set(g), m);
          row.uniform_alpha_minimal = count_cliques_formula(g, w_alpha, k) == min.min_value;
          if (!row.conjecture_ok) ++report.violations;
          if (!row.uniform_alpha_minimal) ++report.non_uniform_alpha_count;
        } catch (const BudgetExceeded& e) {
          row.skipped = true;
          row.skip_reason = std::string("budget exceeded: required ") + e.required.str();
          ++report.skipped;
        }
        report.rows.push_back(std::move(row));
      }
    }
  }
  return report;
}

}  // namespace cliquemin
