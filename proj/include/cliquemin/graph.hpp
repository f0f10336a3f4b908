#ifndef CLIQUEMIN_GRAPH_HPP
#define CLIQUEMIN_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cliquemin {

// Vertex subsets as bitmasks; every graph in this library stays at desk
// scale (n <= 64).
using Mask = std::uint64_t;

using VertexSet = std::vector<int>;  // always kept sorted ascending

Mask set_to_mask(const VertexSet& s);
VertexSet mask_to_set(Mask m);

// Simple undirected graph on vertices 0..n-1, adjacency as bitmask rows.
// Adjacency is symmetric with empty diagonal; labels are optional metadata
// and must be unique per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const;
  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);

  Mask neighbors(int v) const;         // open neighbourhood
  Mask closed_neighbors(int v) const;  // N[v]
  Mask vertex_mask() const;            // all of V
  int degree(int v) const;

  // Edges as (u,v) with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);  // size n, unique

  // True iff every pair of distinct vertices in `m` is adjacent.
  bool is_clique_mask(Mask m) const;

  void check_vertex(int v) const;  // throws std::out_of_range

 private:
  int n_ = 0;
  std::vector<Mask> adj_;
  std::vector<std::string> labels_;
};

// The vertex sets of the k-cliques of a graph, each sorted, listed in
// lexicographic order.
struct CliqueSet {
  int k = 0;
  std::vector<VertexSet> members;
};

// Vertex ordering v_1..v_n in which each vertex's closed neighbourhood,
// minus earlier vertices, induces a clique.
struct EliminationOrdering {
  std::vector<int> order;
};

// All k-element vertex sets inducing complete subgraphs. k > n gives an
// empty set; k < 1 is an error.
CliqueSet enumerate_cliques(const Graph& g, int k);

// Number of k-cliques without materializing them.
std::uint64_t count_k_cliques(const Graph& g, int k);

// True iff no edge joins two vertices of s. Out-of-range vertices throw.
bool is_independent(const Graph& g, const VertexSet& s);
bool is_independent_mask(const Graph& g, Mask s);

// Size of a largest independent set within the candidate mask.
int max_independent_set_size(const Graph& g, Mask candidates);

// Largest independent set; ties broken by lexicographically smallest
// sorted vertex list. Exact branch and bound, desk scale.
VertexSet max_independent_set(const Graph& g);

// True iff no k-subset of s induces a k-clique.
bool is_k_clique_independent(const Graph& g, Mask s, int k);

// Largest k-clique independent set (no k members form a k-clique), k >= 2,
// same lexicographic tie-break. Exhaustive, desk scale.
VertexSet max_k_clique_independent_set(const Graph& g, int k);
int k_clique_independence_number(const Graph& g, int k);

// Checks the per-vertex clique condition of an elimination ordering
// directly against g.
bool is_valid_elimination_ordering(const Graph& g, const EliminationOrdering& peo);

// Maximum-cardinality search followed by direct verification of the
// clique condition; nullopt means the graph is not chordal.
std::optional<EliminationOrdering> find_elimination_ordering(const Graph& g);

bool is_chordal(const Graph& g);

bool is_connected(const Graph& g);

// Same vertex count and edge set (labels ignored).
bool same_edges(const Graph& a, const Graph& b);

// Stable FNV-1a hash of the structure, as a hex string; echoed in reports
// so failures are self-contained repro cases.
std::string graph_hash(const Graph& g);

}  // namespace cliquemin

#endif  // CLIQUEMIN_GRAPH_HPP
