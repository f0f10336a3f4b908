#include "cliquemin/blowup.hpp"

#include <algorithm>
#include <bit>

namespace cliquemin {

std::string to_string(const BigCount& c) { return c.str(); }

BigCount binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigCount result = 1;
  for (long long j = 1; j <= k; ++j) {
    result *= n - k + j;
    result /= j;  // exact at every step
  }
  return result;
}

Weighting::Weighting(std::vector<long long> weights) : weights_(std::move(weights)) {
  for (long long w : weights_) {
    if (w < 0) throw std::invalid_argument("weights must be non-negative");
    total_ += w;
  }
}

Mask Weighting::support_mask() const {
  Mask m = 0;
  for (int v = 0; v < size(); ++v)
    if (weights_[static_cast<size_t>(v)] > 0) m |= Mask{1} << v;
  return m;
}

VertexSet Weighting::support() const { return mask_to_set(support_mask()); }

Weighting Weighting::with(int v, long long value) const {
  std::vector<long long> copy = weights_;
  copy.at(static_cast<size_t>(v)) = value;
  return Weighting(std::move(copy));
}

int BlowupGraph::index_of(int base, int copy) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), std::make_pair(base, copy));
  if (it == vertices.end() || *it != std::make_pair(base, copy)) return -1;
  return static_cast<int>(it - vertices.begin());
}

BlowupGraph build_blowup(const Graph& g, const Weighting& w) {
  if (w.size() != g.vertex_count())
    throw std::invalid_argument("weighting size does not match graph");
  if (w.total() > 64)
    throw std::invalid_argument("blow-up too large to represent (m > 64)");
  BlowupGraph b;
  for (int v = 0; v < g.vertex_count(); ++v)
    for (long long i = 1; i <= w[v]; ++i)
      b.vertices.emplace_back(v, static_cast<int>(i));
  const int m = static_cast<int>(b.vertices.size());
  b.graph = Graph(m);
  for (int p = 0; p < m; ++p) {
    for (int q = p + 1; q < m; ++q) {
      auto [u, i] = b.vertices[static_cast<size_t>(p)];
      auto [v, j] = b.vertices[static_cast<size_t>(q)];
      if (u == v || g.has_edge(u, v)) b.graph.add_edge(p, q);
    }
  }
  return b;
}

CliqueCounter::CliqueCounter(const Graph& g, int k) : n_(g.vertex_count()), k_(k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  cliques_by_min_.resize(static_cast<size_t>(n_));
  for (int i = 1; i <= std::min(k, n_); ++i) {
    CliqueSet cs = enumerate_cliques(g, i);
    for (auto& member : cs.members) {
      int lo = member.front();
      cliques_by_min_[static_cast<size_t>(lo)].push_back(std::move(member));
    }
  }
}

const std::vector<VertexSet>& CliqueCounter::cliques_with_min(int v) const {
  return cliques_by_min_.at(static_cast<size_t>(v));
}

const BigCount& CliqueCounter::binom(long long n, int j) const {
  static thread_local BigCount scratch;
  if (n > 4096) {  // no point memoizing huge rows
    scratch = binomial(n, j);
    return scratch;
  }
  auto row = static_cast<size_t>(n);
  if (binom_rows_.size() <= row) binom_rows_.resize(row + 1);
  auto& r = binom_rows_[row];
  if (r.empty()) {
    r.resize(static_cast<size_t>(k_) + 1);
    for (int t = 0; t <= k_; ++t) r[static_cast<size_t>(t)] = binomial(n, t);
  }
  return r[static_cast<size_t>(j)];
}

BigCount CliqueCounter::clique_contribution(const VertexSet& clique, const Weighting& w) const {
  const int i = static_cast<int>(clique.size());
  if (i > k_) return 0;
  for (int v : clique)
    if (w[v] == 0) return 0;
  BigCount total = 0;
  // compositions k_1 + ... + k_i = k with k_j >= 1, filled from the last
  // position so the enumeration runs in colex order
  std::vector<int> parts(static_cast<size_t>(i));
  BigCount term;
  auto recurse = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == 0) {
      parts[0] = remaining;
      term = 1;
      for (int j = 0; j < i; ++j) {
        const BigCount& b = binom(w[clique[static_cast<size_t>(j)]], parts[static_cast<size_t>(j)]);
        if (b == 0) return;
        term *= b;
      }
      total += term;
      return;
    }
    for (int kj = 1; kj <= remaining - pos; ++kj) {
      parts[static_cast<size_t>(pos)] = kj;
      self(self, pos - 1, remaining - kj);
    }
  };
  recurse(recurse, i - 1, k_);
  return total;
}

BigCount CliqueCounter::count(const Weighting& w) const {
  if (w.size() != n_) throw std::invalid_argument("weighting size does not match graph");
  BigCount total = 0;
  for (const auto& bucket : cliques_by_min_)
    for (const auto& clique : bucket) total += clique_contribution(clique, w);
  return total;
}

BigCount count_cliques_formula(const Graph& g, const Weighting& w, int k) {
  return CliqueCounter(g, k).count(w);
}

BigCount count_cliques_oracle(const Graph& g, const Weighting& w, int k, long long max_blowup) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (w.total() > max_blowup)
    throw BudgetExceeded("blow-up enumeration budget exceeded", w.total(), max_blowup);
  BlowupGraph b = build_blowup(g, w);
  return count_k_cliques(b.graph, k);
}

BigCount count_edges_formula(const Graph& g, const Weighting& w) {
  if (w.size() != g.vertex_count())
    throw std::invalid_argument("weighting size does not match graph");
  BigCount total = 0;
  for (int v = 0; v < g.vertex_count(); ++v) total += binomial(w[v], 2);
  for (auto [u, v] : g.edges()) total += BigCount(w[u]) * w[v];
  return total;
}

Weighting uniform_weighting(const Graph& g, const VertexSet& support, long long m) {
  if (m < 0) throw std::invalid_argument("total weight must be non-negative");
  if (support.empty() && m > 0)
    throw std::invalid_argument("cannot place positive weight on an empty support");
  for (int v : support) g.check_vertex(v);
  VertexSet sorted = support;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("support contains duplicate vertices");
  std::vector<long long> weights(static_cast<size_t>(g.vertex_count()), 0);
  if (!sorted.empty()) {
    const long long u = static_cast<long long>(sorted.size());
    const long long floor_w = m / u;
    const long long r = m % u;
    for (size_t idx = 0; idx < sorted.size(); ++idx)
      weights[static_cast<size_t>(sorted[idx])] =
          floor_w + (static_cast<long long>(idx) < r ? 1 : 0);
  }
  return Weighting(std::move(weights));
}

bool is_uniform_on(const Weighting& w, const VertexSet& support) {
  if (support.empty()) return w.total() == 0;
  Mask u_mask = set_to_mask(support);
  if ((w.support_mask() & ~u_mask) != 0) return false;  // weight outside U
  const long long m = w.total();
  const long long u = static_cast<long long>(support.size());
  const long long floor_w = m / u;
  const long long r = m % u;
  long long ceil_count = 0;
  for (int v : support) {
    if (w[v] == floor_w) continue;
    if (r > 0 && w[v] == floor_w + 1)
      ++ceil_count;
    else
      return false;
  }
  return ceil_count == r;
}

bool is_uniform_alpha(const Graph& g, const Weighting& w) {
  if (w.size() != g.vertex_count())
    throw std::invalid_argument("weighting size does not match graph");
  if (g.vertex_count() == 0) return w.total() == 0;
  const int alpha = max_independent_set_size(g, g.vertex_mask());
  const long long m = w.total();
  const long long floor_w = m / alpha;
  const long long r = m % alpha;
  Mask s = w.support_mask();
  if (!is_independent_mask(g, s)) return false;
  if (floor_w > 0) {
    // support must be exactly a maximum independent set
    VertexSet sup = w.support();
    if (static_cast<int>(sup.size()) != alpha) return false;
    return is_uniform_on(w, sup);
  }
  // floor is zero: nonzero weights are all 1 on r vertices, and the support
  // must extend to an independent set of maximum size
  if (std::popcount(s) != static_cast<int>(r)) return false;
  for (int v : mask_to_set(s))
    if (w[v] != 1) return false;
  Mask candidates = g.vertex_mask() & ~s;
  for (int v : mask_to_set(s)) candidates &= ~g.neighbors(v);
  return std::popcount(s) + max_independent_set_size(g, candidates) == alpha;
}

}  // namespace cliquemin
