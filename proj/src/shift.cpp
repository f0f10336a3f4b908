#include "cliquemin/shift.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace cliquemin {

std::string shift_mode_name(ShiftMode mode) {
  return mode == ShiftMode::Lemma3 ? "lemma3" : "lemma4";
}

ShiftMode parse_shift_mode(const std::string& name) {
  if (name == "lemma3") return ShiftMode::Lemma3;
  if (name == "lemma4") return ShiftMode::Lemma4;
  throw std::invalid_argument("unknown shift mode: " + name);
}

Weighting shift_edge(const Graph& g, const Weighting& w, int a, int b) {
  if (w.size() != g.vertex_count())
    throw std::invalid_argument("weighting size does not match graph");
  if (!g.has_edge(a, b)) throw std::invalid_argument("shift requires an edge ab");
  std::vector<long long> values = w.values();
  values[static_cast<size_t>(b)] += values[static_cast<size_t>(a)];
  values[static_cast<size_t>(a)] = 0;
  return Weighting(std::move(values));
}

Weighting katona_best_edge_shift(const Graph& g, const Weighting& w, int a, int b) {
  Weighting w_ab = shift_edge(g, w, a, b);
  Weighting w_ba = shift_edge(g, w, b, a);
  // ties go to w_ab
  return count_edges_formula(g, w_ba) < count_edges_formula(g, w_ab) ? w_ba : w_ab;
}

namespace {

void check_spec_well_formed(const Graph& g, const ShiftSpec& spec) {
  if (spec.a_list.size() != spec.b_list.size())
    throw std::invalid_argument("shift spec lists must have equal length");
  std::set<int> seen;
  for (int v : spec.a_list) {
    g.check_vertex(v);
    if (!seen.insert(v).second) throw std::invalid_argument("shift spec has duplicate vertices");
  }
  for (int v : spec.b_list) {
    g.check_vertex(v);
    if (!seen.insert(v).second)
      throw std::invalid_argument("shift spec lists must be disjoint and duplicate-free");
  }
}

}  // namespace

ShiftValidation validate_shift(const Graph& g, const Weighting& w, const ShiftSpec& spec,
                               ShiftMode mode) {
  if (w.size() != g.vertex_count())
    throw std::invalid_argument("weighting size does not match graph");
  check_spec_well_formed(g, spec);
  const int r = spec.r();
  ShiftValidation result;
  result.mode = mode;
  result.cond_edges = true;
  result.cond_b_set = true;
  result.cond_neighborhood = true;

  Mask a_mask = set_to_mask(spec.a_list);
  Mask zero_mask = g.vertex_mask() & ~w.support_mask();

  for (int i = 0; i < r; ++i) {
    if (!g.has_edge(spec.a_list[static_cast<size_t>(i)], spec.b_list[static_cast<size_t>(i)])) {
      result.cond_edges = false;
      result.witness_failures.push_back({"edges", i + 1, spec.b_list[static_cast<size_t>(i)]});
    }
  }

  if (mode == ShiftMode::Lemma3) {
    for (int i = 0; i < r; ++i) {
      for (int j = i + 1; j < r; ++j) {
        int bi = spec.b_list[static_cast<size_t>(i)], bj = spec.b_list[static_cast<size_t>(j)];
        if (g.has_edge(bi, bj)) {
          result.cond_b_set = false;
          result.witness_failures.push_back({"b_set", i + 1, bj});
        }
      }
    }
  } else {
    // edges inside B are tolerated when the corresponding pairs are fully
    // joined: a_i a_j, a_i b_j, a_j b_i must all be edges
    for (int i = 0; i < r; ++i) {
      for (int j = i + 1; j < r; ++j) {
        int ai = spec.a_list[static_cast<size_t>(i)], aj = spec.a_list[static_cast<size_t>(j)];
        int bi = spec.b_list[static_cast<size_t>(i)], bj = spec.b_list[static_cast<size_t>(j)];
        if (!g.has_edge(bi, bj)) continue;
        if (!g.has_edge(ai, aj)) {
          result.cond_b_set = false;
          result.witness_failures.push_back({"b_set", i + 1, aj});
        }
        if (!g.has_edge(ai, bj)) {
          result.cond_b_set = false;
          result.witness_failures.push_back({"b_set", i + 1, bj});
        }
        if (!g.has_edge(aj, bi)) {
          result.cond_b_set = false;
          result.witness_failures.push_back({"b_set", j + 1, bi});
        }
      }
    }
  }

  for (int i = 0; i < r; ++i) {
    int ai = spec.a_list[static_cast<size_t>(i)], bi = spec.b_list[static_cast<size_t>(i)];
    Mask must_cover = g.neighbors(bi) & ~(a_mask | zero_mask);
    Mask uncovered = must_cover & ~g.neighbors(ai);
    if (uncovered) {
      result.cond_neighborhood = false;
      for (int v : mask_to_set(uncovered))
        result.witness_failures.push_back({"neighborhood", i + 1, v});
    }
  }

  result.a_independent = is_independent_mask(g, a_mask);
  return result;
}

Weighting multi_shift(const Graph& g, const Weighting& w, const ShiftSpec& spec,
                      ShiftMode mode) {
  ShiftValidation validation = validate_shift(g, w, spec, mode);
  if (!validation.valid())
    throw std::invalid_argument("shift spec fails validation (" +
                                std::to_string(validation.witness_failures.size()) +
                                " condition failure(s)); refusing to shift");
  std::vector<long long> values = w.values();
  for (int i = 0; i < spec.r(); ++i) {
    int ai = spec.a_list[static_cast<size_t>(i)], bi = spec.b_list[static_cast<size_t>(i)];
    values[static_cast<size_t>(bi)] += values[static_cast<size_t>(ai)];
    values[static_cast<size_t>(ai)] = 0;
  }
  return Weighting(std::move(values));
}

InjectionCertificate build_injection_certificate(const Graph& g, const Weighting& w,
                                                 const ShiftSpec& spec, int k, ShiftMode mode,
                                                 long long max_blowup) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (w.total() > max_blowup)
    throw BudgetExceeded("certificate blow-up budget exceeded", w.total(), max_blowup);

  InjectionCertificate cert;
  cert.shifted = multi_shift(g, w, spec, mode);

  BlowupGraph before = build_blowup(g, w);
  BlowupGraph after = build_blowup(g, cert.shifted);

  // which shifted pair, if any, a vertex belongs to
  std::vector<int> pair_of(static_cast<size_t>(g.vertex_count()), -1);
  for (int i = 0; i < spec.r(); ++i) pair_of[static_cast<size_t>(spec.b_list[static_cast<size_t>(i)])] = i;

  const int m = static_cast<int>(after.vertices.size());
  std::vector<int> phi(static_cast<size_t>(m), -1);  // index in after -> index in before
  for (int p = 0; p < m; ++p) {
    auto [v, i] = after.vertices[static_cast<size_t>(p)];
    int j = pair_of[static_cast<size_t>(v)];
    std::pair<int, int> image;
    if (j >= 0 && i > w[v]) {
      // copy beyond b_j's old weight: relabel into a_j's clique
      image = {spec.a_list[static_cast<size_t>(j)], i - static_cast<int>(w[v])};
    } else {
      image = {v, i};
    }
    phi[static_cast<size_t>(p)] = before.index_of(image.first, image.second);
    cert.vertex_map.push_back({{v, i}, image});
  }

  // bijectivity: every image exists and is hit exactly once, and the two
  // vertex sets have equal size (mass conservation gives |V| equality)
  cert.phi_bijective = static_cast<int>(before.vertices.size()) == m;
  std::vector<char> hit(before.vertices.size(), 0);
  for (int p = 0; p < m && cert.phi_bijective; ++p) {
    int q = phi[static_cast<size_t>(p)];
    if (q < 0 || hit[static_cast<size_t>(q)]) cert.phi_bijective = false;
    else hit[static_cast<size_t>(q)] = 1;
  }

  CliqueSet after_cliques = enumerate_cliques(after.graph, k);
  cert.cliques_after = static_cast<long long>(after_cliques.members.size());
  cert.cliques_before = static_cast<long long>(count_k_cliques(before.graph, k));

  cert.images_are_cliques = true;
  cert.clique_map_injective = true;
  std::set<Mask> images;
  for (const auto& clique : after_cliques.members) {
    Mask image = 0;
    for (int p : clique) image |= Mask{1} << phi[static_cast<size_t>(p)];
    if (!before.graph.is_clique_mask(image)) cert.images_are_cliques = false;
    if (!images.insert(image).second) cert.clique_map_injective = false;
  }
  return cert;
}

}  // namespace cliquemin
