#include "cliquemin/corpus.hpp"

#include <stdexcept>

namespace cliquemin {

Graph edgeless_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph prism_graph() {
  Graph g(6);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  g.add_edge(3, 5);
  g.add_edge(0, 3);
  g.add_edge(1, 4);
  g.add_edge(2, 5);
  return g;
}

std::vector<Graph> all_graphs(int n) {
  if (n < 0 || n > 7) throw std::invalid_argument("all_graphs is exhaustive; n must be <= 7");
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::vector<Graph> out;
  out.reserve(size_t{1} << slots.size());
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << slots.size()); ++bits) {
    Graph g(n);
    for (size_t e = 0; e < slots.size(); ++e)
      if ((bits >> e) & 1) g.add_edge(slots[e].first, slots[e].second);
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> all_graphs_up_to(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n)
    for (Graph& g : all_graphs(n)) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> all_connected_graphs_up_to(int max_n) {
  std::vector<Graph> out;
  for (Graph& g : all_graphs_up_to(max_n))
    if (is_connected(g)) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> all_chordal_graphs_up_to(int max_n) {
  std::vector<Graph> out;
  for (Graph& g : all_graphs_up_to(max_n))
    if (is_chordal(g)) out.push_back(std::move(g));
  return out;
}

namespace {

void partitions_into(int remaining, int max_part, std::vector<int>& current,
                     std::vector<MultipartiteSpec>& out) {
  if (remaining == 0) {
    out.push_back(MultipartiteSpec::of(current));
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_into(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<MultipartiteSpec> all_multipartite_specs_up_to(int max_total) {
  std::vector<MultipartiteSpec> out;
  for (int total = 1; total <= max_total; ++total) {
    std::vector<int> current;
    partitions_into(total, total, current, out);
  }
  return out;
}

}  // namespace cliquemin
