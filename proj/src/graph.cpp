#include "cliquemin/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace cliquemin {

Mask set_to_mask(const VertexSet& s) {
  Mask m = 0;
  for (int v : s) m |= Mask{1} << v;
  return m;
}

VertexSet mask_to_set(Mask m) {
  VertexSet s;
  while (m) {
    int v = std::countr_zero(m);
    s.push_back(v);
    m &= m - 1;
  }
  return s;
}

Graph::Graph(int n) : n_(n), adj_(static_cast<size_t>(std::max(n, 0)), 0) {
  if (n < 0 || n > 64) throw std::invalid_argument("graph size out of range (0..64)");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loops not allowed in a simple graph");
  adj_[u] |= Mask{1} << v;
  adj_[v] |= Mask{1} << u;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u] >> v) & 1;
}

int Graph::edge_count() const {
  int total = 0;
  for (int v = 0; v < n_; ++v) total += std::popcount(adj_[v]);
  return total / 2;
}

Mask Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

Mask Graph::closed_neighbors(int v) const { return neighbors(v) | (Mask{1} << v); }

Mask Graph::vertex_mask() const {
  return n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
}

int Graph::degree(int v) const { return std::popcount(neighbors(v)); }

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    Mask later = adj_[u] & ~((Mask{2} << u) - 1);
    for (int v : mask_to_set(later)) out.emplace_back(u, v);
  }
  return out;
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (static_cast<int>(labels.size()) != n_)
    throw std::invalid_argument("label count must equal vertex count");
  std::unordered_set<std::string> seen(labels.begin(), labels.end());
  if (static_cast<int>(seen.size()) != n_)
    throw std::invalid_argument("labels must be unique per vertex");
  labels_ = std::move(labels);
}

bool Graph::is_clique_mask(Mask m) const {
  for (Mask rest = m; rest;) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    if ((m & ~(Mask{1} << v) & ~adj_[v]) != 0) return false;
  }
  return true;
}

namespace {

// Extends `current` by candidate vertices; within one call the loop
// advances through candidates in ascending order, so each recursion only
// sees vertices above the one just added. Emits into `out` when k members
// are reached, or just counts when out == nullptr.
void extend_cliques(const Graph& g, VertexSet& current, Mask candidates, int k,
                    std::vector<VertexSet>* out, std::uint64_t& count) {
  if (static_cast<int>(current.size()) == k) {
    ++count;
    if (out) {
      out->push_back(current);
      std::sort(out->back().begin(), out->back().end());
    }
    return;
  }
  int missing = k - static_cast<int>(current.size());
  while (candidates) {
    if (std::popcount(candidates) < missing) return;
    int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    current.push_back(v);
    extend_cliques(g, current, candidates & g.neighbors(v), k, out, count);
    current.pop_back();
  }
}

// k-cliques inside `inside` that contain vertex v.
std::uint64_t count_cliques_through(const Graph& g, Mask inside, int v, int k) {
  std::uint64_t count = 0;
  VertexSet current{v};
  extend_cliques(g, current, inside & g.neighbors(v) & ~(Mask{1} << v), k, nullptr, count);
  return count;
}

}  // namespace

CliqueSet enumerate_cliques(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("clique size must be >= 1");
  CliqueSet result;
  result.k = k;
  std::uint64_t count = 0;
  VertexSet current;
  extend_cliques(g, current, g.vertex_mask(), k, &result.members, count);
  return result;
}

std::uint64_t count_k_cliques(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("clique size must be >= 1");
  std::uint64_t count = 0;
  VertexSet current;
  extend_cliques(g, current, g.vertex_mask(), k, nullptr, count);
  return count;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  for (int v : s) g.check_vertex(v);
  return is_independent_mask(g, set_to_mask(s));
}

bool is_independent_mask(const Graph& g, Mask s) {
  for (Mask rest = s; rest;) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    if (g.neighbors(v) & rest) return false;
  }
  return true;
}

namespace {

int mis_recurse(const Graph& g, Mask candidates) {
  if (!candidates) return 0;
  // vertices of degree <= 1 inside the candidates are always safe to take
  for (Mask rest = candidates; rest;) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    if (std::popcount(g.neighbors(v) & candidates) <= 1)
      return 1 + mis_recurse(g, candidates & ~g.closed_neighbors(v));
  }
  // branch on a vertex of maximum degree within the candidates
  int pick = -1, pick_deg = -1;
  for (Mask scan = candidates; scan;) {
    int v = std::countr_zero(scan);
    scan &= scan - 1;
    int deg = std::popcount(g.neighbors(v) & candidates);
    if (deg > pick_deg) {
      pick_deg = deg;
      pick = v;
    }
  }
  int with = 1 + mis_recurse(g, candidates & ~g.closed_neighbors(pick));
  int without = mis_recurse(g, candidates & ~(Mask{1} << pick));
  return std::max(with, without);
}

}  // namespace

int max_independent_set_size(const Graph& g, Mask candidates) {
  return mis_recurse(g, candidates);
}

VertexSet max_independent_set(const Graph& g) {
  const int alpha = max_independent_set_size(g, g.vertex_mask());
  // greedy lexicographic completion: take v iff a maximum set through the
  // current prefix still exists among vertices > v
  VertexSet chosen;
  Mask allowed = g.vertex_mask();
  for (int v = 0; v < g.vertex_count() && static_cast<int>(chosen.size()) < alpha; ++v) {
    if (!((allowed >> v) & 1)) continue;
    Mask rest = allowed & ~g.closed_neighbors(v) & ~((Mask{2} << v) - 1);
    if (static_cast<int>(chosen.size()) + 1 + max_independent_set_size(g, rest) == alpha) {
      chosen.push_back(v);
      allowed &= ~g.closed_neighbors(v);
    } else {
      allowed &= ~(Mask{1} << v);
    }
  }
  return chosen;
}

bool is_k_clique_independent(const Graph& g, Mask s, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  std::uint64_t count = 0;
  VertexSet current;
  extend_cliques(g, current, s, k, nullptr, count);
  return count == 0;
}

namespace {

// Include/exclude search for the largest k-clique-free subset; `chosen` is
// k-clique-free by construction, vertices below `next` are all decided.
struct KCliqueIndSearch {
  const Graph& g;
  int k;
  int best = 0;

  void run(Mask chosen, int next, int chosen_size) {
    const int n = g.vertex_count();
    if (chosen_size + (n - next) <= best) return;
    if (next == n) {
      best = std::max(best, chosen_size);
      return;
    }
    Mask with_v = chosen | (Mask{1} << next);
    // any new k-clique inside chosen|next must pass through next
    if (count_cliques_through(g, with_v, next, k) == 0)
      run(with_v, next + 1, chosen_size + 1);
    run(chosen, next + 1, chosen_size);
  }
};

}  // namespace

int k_clique_independence_number(const Graph& g, int k) {
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  KCliqueIndSearch search{g, k};
  search.run(0, 0, 0);
  return search.best;
}

VertexSet max_k_clique_independent_set(const Graph& g, int k) {
  const int alpha_k = k_clique_independence_number(g, k);
  VertexSet chosen;
  Mask chosen_mask = 0;
  for (int v = 0; v < g.vertex_count() && static_cast<int>(chosen.size()) < alpha_k; ++v) {
    Mask with_v = chosen_mask | (Mask{1} << v);
    if (count_cliques_through(g, with_v, v, k) != 0) continue;
    KCliqueIndSearch search{g, k};
    search.best = static_cast<int>(chosen.size());
    search.run(with_v, v + 1, static_cast<int>(chosen.size()) + 1);
    if (search.best == alpha_k) {
      chosen.push_back(v);
      chosen_mask = with_v;
    }
  }
  return chosen;
}

bool is_valid_elimination_ordering(const Graph& g, const EliminationOrdering& peo) {
  const int n = g.vertex_count();
  if (static_cast<int>(peo.order.size()) != n) return false;
  Mask seen = 0;
  Mask all = g.vertex_mask();
  for (int v : peo.order) {
    if (v < 0 || v >= n || ((seen >> v) & 1)) return false;
    Mask later_closed = g.closed_neighbors(v) & (all & ~seen);
    if (!g.is_clique_mask(later_closed)) return false;
    seen |= Mask{1} << v;
  }
  return seen == all;
}

std::optional<EliminationOrdering> find_elimination_ordering(const Graph& g) {
  const int n = g.vertex_count();
  // maximum-cardinality search, ties to the smallest index; the reverse of
  // the visit order is then checked literally against the definition
  std::vector<int> weight(n, 0);
  std::vector<bool> visited(n, false);
  std::vector<int> mcs;
  mcs.reserve(n);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!visited[v] && (pick == -1 || weight[v] > weight[pick])) pick = v;
    visited[pick] = true;
    mcs.push_back(pick);
    for (int u : mask_to_set(g.neighbors(pick)))
      if (!visited[u]) ++weight[u];
  }
  EliminationOrdering peo;
  peo.order.assign(mcs.rbegin(), mcs.rend());
  if (!is_valid_elimination_ordering(g, peo)) return std::nullopt;
  return peo;
}

bool is_chordal(const Graph& g) { return find_elimination_ordering(g).has_value(); }

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return true;
  Mask reached = 1;
  for (;;) {
    Mask next = reached;
    for (int v : mask_to_set(reached)) next |= g.neighbors(v);
    if (next == reached) break;
    reached = next;
  }
  return reached == g.vertex_mask();
}

bool same_edges(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  for (int v = 0; v < a.vertex_count(); ++v)
    if (a.neighbors(v) != b.neighbors(v)) return false;
  return true;
}

std::string graph_hash(const Graph& g) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t x) {
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (x >> (8 * byte)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<std::uint64_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) mix(g.neighbors(v));
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace cliquemin
