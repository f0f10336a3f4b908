#ifndef CLIQUEMIN_FAMILIES_HPP
#define CLIQUEMIN_FAMILIES_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cliquemin/blowup.hpp"
#include "cliquemin/graph.hpp"

namespace cliquemin {

// Comparability graph of the subset lattice of [n]: one vertex per subset,
// edges between strictly nested subsets. Vertices are ordered by
// (level, bitmask value), so indices are canonical across runs.
struct SpernerGraph {
  int n = 0;
  Graph graph;
  std::vector<int> level;           // |X| per vertex
  std::vector<std::uint32_t> mask;  // X as a bitmask over [n]
  std::vector<int> index_of_mask;   // inverse of `mask`

  VertexSet level_vertices(int ell) const;
  int vertex_for(std::uint32_t subset_mask) const;
  int complement_vertex(int v) const;
};

// 1 <= n <= 5 (32 vertices is the practical ceiling for exhaustive work).
SpernerGraph build_sperner(int n);

// Part sizes n_1 >= ... >= n_r >= 1, stored sorted descending.
struct MultipartiteSpec {
  std::vector<int> sizes;

  static MultipartiteSpec of(std::vector<int> sizes);
  int part_count() const { return static_cast<int>(sizes.size()); }
  int vertex_count() const;
  // vertices of part j (1-based), consecutive by construction
  VertexSet part_vertices(int j) const;
};

// Complete multipartite graph: edges exactly between distinct parts; part
// membership is recorded in the vertex labels ("I1.1", "I1.2", ...).
Graph build_multipartite(const MultipartiteSpec& spec);

enum class LevelDirection { Up, Down };

std::string level_direction_name(LevelDirection d);
LevelDirection parse_level_direction(const std::string& name);

// Injection from level r into level r+1 (up) or r-1 (down) along strict
// containments; saturates level r whenever the hypotheses hold.
struct LevelMatching {
  int r = 0;
  LevelDirection direction = LevelDirection::Up;
  std::vector<std::pair<int, int>> pairs;  // (source vertex, image vertex)
};

// Requires r < n/2 for up and r > n/2 for down; computed by augmenting-path
// maximum matching on the containment relation. Sources are processed in
// lexicographic mask order and augmenting choices are lex-smallest, so the
// result is deterministic.
LevelMatching hall_level_matching(const SpernerGraph& b, int r, LevelDirection direction);

// The vertices at level ceil(n/2).
VertexSet middle_level(const SpernerGraph& b);

// w'(X) = w([n] \ X). Complementation is an automorphism of the graph, so
// every clique count is invariant under this transform.
Weighting complement_weighting(const SpernerGraph& b, const Weighting& w);

}  // namespace cliquemin

#endif  // CLIQUEMIN_FAMILIES_HPP
