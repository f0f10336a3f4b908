#ifndef CLIQUEMIN_VERIFY_HPP
#define CLIQUEMIN_VERIFY_HPP

#include <vector>

#include "cliquemin/report.hpp"
#include "cliquemin/search.hpp"

namespace cliquemin {

// Reproduction claims: each recomputes the quantities from scratch and
// compares them against their closed forms.

// 3-vertex path, total weight 3k: the weighting uniform on all three
// vertices yields 2*C(2k,k) - 1 k-cliques, while concentrating the middle
// vertex's weight onto an endpoint yields only C(2k,k) + 1. Requires k >= 3.
VerificationReport reproduce_counterexample1(int k, long long max_blowup = 25);

// Prism with unit weights has 2 triangles in its blow-up; shifting one
// inner vertex's weight along a triangle edge gives 3 and along a matching
// edge gives 4.
VerificationReport reproduce_figure1();

// Division-algorithm split: a uniform weighting puts floor(m/n) on n - r
// vertices and ceil(m/n) on r = m mod n vertices.
VerificationReport reproduce_remark2_counts(long long m, int n);

// Verification claims, named t3..t9 / lemma1..lemma8 on the CLI.

// t3: the minimum edge count over all m-weightings is attained by a
// uniform-alpha weighting (k = 2, any graph).
VerificationReport verify_t3(const Graph& g, long long m, const SearchOptions& options = {});

// t4: on the subset-lattice graph, the weighting uniform on the middle
// level attains the exact minimum of pi_k over all m-weightings.
VerificationReport verify_t4(int n, long long m, int k, const SearchOptions& options = {});

// t5 / t6: uniform-alpha attains the minimum on complete multipartite and
// chordal graphs; also replays the structured minimizer from several
// starts and checks each trace ends at the minimum.
VerificationReport verify_t5(const MultipartiteSpec& spec, long long m, int k,
                             const SearchOptions& options = {});
VerificationReport verify_t6(const Graph& g, long long m, int k,
                             const SearchOptions& options = {});

// t8 / t9: strict gap between the uniform-alpha count and the count of the
// weighting uniform on a largest k-clique independent set.
VerificationReport verify_t8(int n, int k, long long m);
VerificationReport verify_t9(const MultipartiteSpec& spec, int k, long long m);

// lemma1: on edgeless graphs the balanced weighting attains the minimum.
VerificationReport verify_lemma1(int n, long long m, int k, const SearchOptions& options = {});

// lemma2: for w supported on an independent set, the weighting uniform on
// a maximum independent set never has more k-cliques.
VerificationReport verify_lemma2(const Graph& g, const Weighting& w, int k);

// lemma3: validates the shift spec, applies it, checks the count never
// increases, and machine-checks the injection certificate.
VerificationReport verify_lemma3(const Graph& g, const Weighting& w, const ShiftSpec& spec,
                                 ShiftMode mode, int k, long long max_blowup = 25);

// lemma8: the containment matching saturates level r.
VerificationReport verify_lemma8(int n, int r, LevelDirection direction);

// Deterministic start weightings used when replaying structured
// minimizers: balanced over V, concentrated on the last vertex, and one
// seeded pseudo-random composition.
std::vector<Weighting> canonical_starts(const Graph& g, long long m);

}  // namespace cliquemin

#endif  // CLIQUEMIN_VERIFY_HPP
