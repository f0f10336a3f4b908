#ifndef CLIQUEMIN_SEARCH_HPP
#define CLIQUEMIN_SEARCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cliquemin/blowup.hpp"
#include "cliquemin/families.hpp"
#include "cliquemin/graph.hpp"
#include "cliquemin/report.hpp"
#include "cliquemin/shift.hpp"

namespace cliquemin {

struct SearchOptions {
  long long max_weightings = 10'000'000;  // bound on C(m+n-1, n-1)
  int minimizer_cap = 1000;
};

// Exact minimum of pi_k over all m-weightings, with every minimizer (up to
// the cap) and the number of weightings evaluated.
struct SearchResult {
  BigCount min_value;
  std::vector<Weighting> minimizers;
  std::uint64_t minimizer_count = 0;  // total, may exceed minimizers.size()
  std::uint64_t visited = 0;
  int cap = 0;
};

// Enumerates all weak compositions of m over V(g) in colex order; partial
// assignments whose committed clique contribution already exceeds the best
// known value are pruned. Throws BudgetExceeded when the composition count
// is over budget.
SearchResult brute_force_min(const Graph& g, long long m, int k,
                             const SearchOptions& options = {});

// One step of a minimization trace: either a simultaneous shift along
// disjoint pairs, or an atomic rebalance onto an independent support.
struct TraceStep {
  enum class Kind { Shift, Rebalance };
  Kind kind = Kind::Shift;
  ShiftSpec spec;  // Shift steps only
  std::string note;
  Weighting after;
  BigCount value_before;
  BigCount value_after;
};

// Sequence of weight-shifting steps with pi_k non-increasing throughout.
struct ShiftTrace {
  int k = 0;
  Weighting start;
  Weighting final_weighting;
  BigCount final_value;
  std::vector<TraceStep> steps;
};

// Lifts every occupied level below ceil(n/2) with full-level shifts, then
// lowers every level above it, then rebalances on the middle level. The
// result is uniform on the middle level and pi_k never increases.
ShiftTrace minimize_sperner(const SpernerGraph& b, const Weighting& start, int k);

// Repeatedly shifts the highest-indexed occupied part onto the preceding
// part (pairing its vertices with the first vertices there), then
// rebalances on the largest part. g must be the graph built from `spec`.
ShiftTrace minimize_multipartite(const Graph& g, const MultipartiteSpec& spec,
                                 const Weighting& start, int k);

// Peels a perfect elimination ordering: an isolated first vertex is set
// aside, otherwise its earliest neighbour's weight is shifted onto it and
// that neighbour is deleted; ends with a rebalance onto a maximum
// independent set. Throws if g is not chordal.
ShiftTrace minimize_chordal(const Graph& g, const Weighting& start, int k);

// Compares pi_k of a uniform-alpha weighting against pi_k of the weighting
// uniform on a largest k-clique independent set; passes iff the first is
// strictly smaller. Requires k >= 3 and m >= k * alpha_k to be conclusive;
// otherwise the report is flagged as hypotheses-unmet (values are still
// computed). Both values are recomputed by the explicit blow-up oracle
// whenever m fits the budget.
VerificationReport strict_gap_check(const Graph& g, long long m, int k,
                                    long long max_blowup = 25);

struct SweepOptions {
  long long max_weightings = 10'000'000;
  int max_support_enum_vertices = 16;  // limit for enumerating candidate supports
};

struct SweepRow {
  std::string graph_hash;
  int n = 0;
  int edge_count = 0;
  long long m = 0;
  int k = 0;
  bool skipped = false;
  std::string skip_reason;
  BigCount min_value;
  std::uint64_t visited = 0;
  // some weighting uniform on some k-clique independent set attains the
  // minimum (the conjecture's claim for this instance)
  bool conjecture_ok = false;
  // some uniform-alpha weighting attains the minimum; false is reported,
  // not treated as a failure
  bool uniform_alpha_minimal = false;
};

struct SweepReport {
  std::vector<SweepRow> rows;
  int violations = 0;
  int non_uniform_alpha_count = 0;
  int skipped = 0;
};

// For each (graph, m, k): finds the exact minimum, then tests whether a
// weighting uniform on a k-clique independent set attains it, and whether
// a uniform-alpha weighting does. Per-instance budget misses are recorded
// as skips, not failures.
SweepReport conjecture_sweep(const std::vector<Graph>& graphs, long long m_min, long long m_max,
                             int k_min, int k_max, const SweepOptions& options = {});

}  // namespace cliquemin

#endif  // CLIQUEMIN_SEARCH_HPP
