#include "cliquemin/families.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace cliquemin {

VertexSet SpernerGraph::level_vertices(int ell) const {
  VertexSet out;
  for (int v = 0; v < graph.vertex_count(); ++v)
    if (level[static_cast<size_t>(v)] == ell) out.push_back(v);
  return out;
}

int SpernerGraph::vertex_for(std::uint32_t subset_mask) const {
  return index_of_mask.at(subset_mask);
}

int SpernerGraph::complement_vertex(int v) const {
  std::uint32_t full = (std::uint32_t{1} << n) - 1;
  return vertex_for(full & ~mask.at(static_cast<size_t>(v)));
}

namespace {

std::string subset_label(std::uint32_t m) {
  std::string s = "{";
  bool first = true;
  for (int e = 0; e < 32; ++e) {
    if ((m >> e) & 1) {
      if (!first) s += ",";
      s += std::to_string(e + 1);
      first = false;
    }
  }
  return s + "}";
}

}  // namespace

SpernerGraph build_sperner(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("sperner graph size out of range (1..5)");
  SpernerGraph b;
  b.n = n;
  const int count = 1 << n;

  std::vector<std::uint32_t> masks(static_cast<size_t>(count));
  std::iota(masks.begin(), masks.end(), 0u);
  std::sort(masks.begin(), masks.end(), [](std::uint32_t x, std::uint32_t y) {
    int px = std::popcount(x), py = std::popcount(y);
    return px != py ? px < py : x < y;
  });

  b.graph = Graph(count);
  b.mask = masks;
  b.level.resize(static_cast<size_t>(count));
  b.index_of_mask.assign(static_cast<size_t>(count), -1);
  std::vector<std::string> labels;
  for (int v = 0; v < count; ++v) {
    b.level[static_cast<size_t>(v)] = std::popcount(masks[static_cast<size_t>(v)]);
    b.index_of_mask[masks[static_cast<size_t>(v)]] = v;
    labels.push_back(subset_label(masks[static_cast<size_t>(v)]));
  }
  for (int u = 0; u < count; ++u) {
    for (int v = u + 1; v < count; ++v) {
      std::uint32_t x = masks[static_cast<size_t>(u)], y = masks[static_cast<size_t>(v)];
      if (x != y && ((x & y) == x || (x & y) == y)) b.graph.add_edge(u, v);
    }
  }
  b.graph.set_labels(std::move(labels));
  return b;
}

MultipartiteSpec MultipartiteSpec::of(std::vector<int> sizes) {
  if (sizes.empty()) throw std::invalid_argument("at least one part is required");
  for (int s : sizes)
    if (s < 1) throw std::invalid_argument("part sizes must be positive");
  std::sort(sizes.begin(), sizes.end(), std::greater<int>());
  MultipartiteSpec spec;
  spec.sizes = std::move(sizes);
  return spec;
}

int MultipartiteSpec::vertex_count() const {
  return std::accumulate(sizes.begin(), sizes.end(), 0);
}

VertexSet MultipartiteSpec::part_vertices(int j) const {
  if (j < 1 || j > part_count()) throw std::out_of_range("part index out of range");
  int offset = 0;
  for (int i = 0; i + 1 < j; ++i) offset += sizes[static_cast<size_t>(i)];
  VertexSet out(static_cast<size_t>(sizes[static_cast<size_t>(j - 1)]));
  std::iota(out.begin(), out.end(), offset);
  return out;
}

Graph build_multipartite(const MultipartiteSpec& spec) {
  const int n = spec.vertex_count();
  Graph g(n);
  std::vector<int> part(static_cast<size_t>(n));
  std::vector<std::string> labels(static_cast<size_t>(n));
  int v = 0;
  for (int j = 1; j <= spec.part_count(); ++j) {
    for (int i = 1; i <= spec.sizes[static_cast<size_t>(j - 1)]; ++i, ++v) {
      part[static_cast<size_t>(v)] = j;
      labels[static_cast<size_t>(v)] = "I" + std::to_string(j) + "." + std::to_string(i);
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (part[static_cast<size_t>(x)] != part[static_cast<size_t>(y)]) g.add_edge(x, y);
  g.set_labels(std::move(labels));
  return g;
}

std::string level_direction_name(LevelDirection d) {
  return d == LevelDirection::Up ? "up" : "down";
}

LevelDirection parse_level_direction(const std::string& name) {
  if (name == "up") return LevelDirection::Up;
  if (name == "down") return LevelDirection::Down;
  throw std::invalid_argument("unknown direction: " + name);
}

LevelMatching hall_level_matching(const SpernerGraph& b, int r, LevelDirection direction) {
  if (r < 0 || r > b.n) throw std::invalid_argument("level out of range");
  if (direction == LevelDirection::Up && !(2 * r < b.n))
    throw std::invalid_argument("up matching requires r < n/2");
  if (direction == LevelDirection::Down && !(2 * r > b.n))
    throw std::invalid_argument("down matching requires r > n/2");

  const int target_level = direction == LevelDirection::Up ? r + 1 : r - 1;
  VertexSet sources = b.level_vertices(r);        // already in lex mask order
  VertexSet targets = b.level_vertices(target_level);

  // match[t] = index into sources currently matched to targets[t]
  std::vector<int> match(targets.size(), -1);
  auto adjacent = [&](int s, int t) {
    std::uint32_t x = b.mask[static_cast<size_t>(sources[static_cast<size_t>(s)])];
    std::uint32_t y = b.mask[static_cast<size_t>(targets[static_cast<size_t>(t)])];
    return direction == LevelDirection::Up ? (x & y) == x : (x & y) == y;
  };
  std::vector<char> visited;
  auto augment = [&](auto&& self, int s) -> bool {
    for (int t = 0; t < static_cast<int>(targets.size()); ++t) {
      if (visited[static_cast<size_t>(t)] || !adjacent(s, t)) continue;
      visited[static_cast<size_t>(t)] = 1;
      if (match[static_cast<size_t>(t)] == -1 || self(self, match[static_cast<size_t>(t)])) {
        match[static_cast<size_t>(t)] = s;
        return true;
      }
    }
    return false;
  };
  int matched = 0;
  for (int s = 0; s < static_cast<int>(sources.size()); ++s) {
    visited.assign(targets.size(), 0);
    if (augment(augment, s)) ++matched;
  }
  if (matched != static_cast<int>(sources.size()))
    throw std::logic_error("level matching failed to saturate; this should be impossible");

  LevelMatching result;
  result.r = r;
  result.direction = direction;
  result.pairs.resize(sources.size());
  for (int t = 0; t < static_cast<int>(targets.size()); ++t) {
    int s = match[static_cast<size_t>(t)];
    if (s >= 0)
      result.pairs[static_cast<size_t>(s)] = {sources[static_cast<size_t>(s)],
                                              targets[static_cast<size_t>(t)]};
  }
  return result;
}

VertexSet middle_level(const SpernerGraph& b) { return b.level_vertices((b.n + 1) / 2); }

Weighting complement_weighting(const SpernerGraph& b, const Weighting& w) {
  if (w.size() != b.graph.vertex_count())
    throw std::invalid_argument("weighting size does not match graph");
  std::vector<long long> values(static_cast<size_t>(w.size()));
  for (int v = 0; v < w.size(); ++v)
    values[static_cast<size_t>(v)] = w[b.complement_vertex(v)];
  return Weighting(std::move(values));
}

}  // namespace cliquemin
