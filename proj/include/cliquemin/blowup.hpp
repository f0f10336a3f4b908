#ifndef CLIQUEMIN_BLOWUP_HPP
#define CLIQUEMIN_BLOWUP_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cliquemin/graph.hpp"

namespace cliquemin {

// Exact counts; clique counts grow combinatorially and must never be
// allowed to overflow.
using BigCount = boost::multiprecision::cpp_int;

std::string to_string(const BigCount& c);

// C(n, k), exact. Negative n or k, or k > n, give 0.
BigCount binomial(long long n, long long k);

// Thrown when an explicit enumeration would exceed its configured budget;
// carries the size the caller asked for.
struct BudgetExceeded : std::runtime_error {
  BudgetExceeded(std::string what, BigCount required, BigCount budget)
      : std::runtime_error(std::move(what)),
        required(std::move(required)),
        budget(std::move(budget)) {}
  BigCount required;
  BigCount budget;
};

// Non-negative integer weight per vertex; the total m is cached.
// Zero-weight vertices stay in the domain.
class Weighting {
 public:
  Weighting() = default;
  explicit Weighting(std::vector<long long> weights);

  int size() const { return static_cast<int>(weights_.size()); }
  long long total() const { return total_; }
  long long operator[](int v) const { return weights_.at(static_cast<size_t>(v)); }
  const std::vector<long long>& values() const { return weights_; }

  Mask support_mask() const;
  VertexSet support() const;

  // Copy with one entry replaced.
  Weighting with(int v, long long value) const;

  bool operator==(const Weighting&) const = default;

 private:
  std::vector<long long> weights_;
  long long total_ = 0;
};

// The graph obtained by replacing each vertex v with a w(v)-clique and
// completely joining cliques of adjacent vertices. Blow-up vertices are the
// pairs (v, i) with i in 1..w(v), ordered by (v, i).
struct BlowupGraph {
  Graph graph;
  std::vector<std::pair<int, int>> vertices;  // (base vertex, 1-based copy)

  // index into `vertices` for (v, i), or -1
  int index_of(int base, int copy) const;
};

BlowupGraph build_blowup(const Graph& g, const Weighting& w);

// Evaluates the closed k-clique-count formula for blow-ups of a fixed
// graph: sum over cliques {v_1..v_i} of g and over compositions
// k_1+...+k_i = k (k_j >= 1) of the products C(w(v_j), k_j). Reusable
// across weightings; binomials are memoized, so a single instance must not
// be shared across threads (the free functions construct their own).
class CliqueCounter {
 public:
  CliqueCounter(const Graph& g, int k);

  BigCount count(const Weighting& w) const;

  int k() const { return k_; }
  // cliques of size i whose minimum vertex is v (used for incremental
  // evaluation during search)
  const std::vector<VertexSet>& cliques_with_min(int v) const;
  BigCount clique_contribution(const VertexSet& clique, const Weighting& w) const;

 private:
  const BigCount& binom(long long n, int j) const;

  int n_;
  int k_;
  std::vector<std::vector<VertexSet>> cliques_by_min_;
  mutable std::vector<std::vector<BigCount>> binom_rows_;  // [w][j], grown lazily
};

// pi_k(G(w)) by the closed formula.
BigCount count_cliques_formula(const Graph& g, const Weighting& w, int k);

// pi_k(G(w)) by building the blow-up and enumerating its k-cliques
// directly; the independent route used to cross-check the formula.
// Throws BudgetExceeded when m exceeds the enumeration budget.
BigCount count_cliques_oracle(const Graph& g, const Weighting& w, int k,
                              long long max_blowup = 25);

// Edge count of G(w): sum of C(w(v), 2) plus sum over edges uv of
// w(u) * w(v). Equals count_cliques_formula at k = 2.
BigCount count_edges_formula(const Graph& g, const Weighting& w);

// Weighting that is zero outside `support` and splits m across it by the
// division algorithm: r = m mod |U| vertices get ceil(m/|U|), the rest get
// floor(m/|U|). Ceil weights go to the lexicographically first r vertices.
Weighting uniform_weighting(const Graph& g, const VertexSet& support, long long m);

// True iff w is uniform on U (zero outside, floor/ceil split inside with
// the division-algorithm counts).
bool is_uniform_on(const Weighting& w, const VertexSet& support);

// True iff w is uniform on some maximum independent set of g.
bool is_uniform_alpha(const Graph& g, const Weighting& w);

}  // namespace cliquemin

#endif  // CLIQUEMIN_BLOWUP_HPP
