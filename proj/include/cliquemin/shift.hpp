#ifndef CLIQUEMIN_SHIFT_HPP
#define CLIQUEMIN_SHIFT_HPP

#include <string>
#include <utility>
#include <vector>

#include "cliquemin/blowup.hpp"
#include "cliquemin/graph.hpp"

namespace cliquemin {

// Paired vertex lists (a_1..a_r) and (b_1..b_r) for a simultaneous weight
// shift: every a_i is zeroed and its weight added to b_i. Order matters
// (it fixes the pairing); the two lists must be disjoint sets of distinct
// vertices.
struct ShiftSpec {
  VertexSet a_list;
  VertexSet b_list;

  int r() const { return static_cast<int>(a_list.size()); }
};

// Which condition is required of B: `Strict` needs B independent; `Relaxed`
// allows edges b_i b_j provided a_i a_j, a_i b_j and a_j b_i are all edges.
// Wire names: "lemma3" and "lemma4".
enum class ShiftMode { Lemma3, Lemma4 };

std::string shift_mode_name(ShiftMode mode);
ShiftMode parse_shift_mode(const std::string& name);

struct ShiftWitness {
  std::string condition;  // "edges" | "b_set" | "neighborhood"
  int pair_index;         // 1-based i
  int vertex;             // offending vertex, or -1
};

// Outcome of checking the three shift preconditions against a concrete
// graph and weighting. The neighbourhood condition excludes A and the
// current zero-weight vertices from N(b_i) before testing containment in
// N(a_i), so it must be re-checked after any weight change.
struct ShiftValidation {
  ShiftMode mode = ShiftMode::Lemma3;
  bool cond_edges = false;
  bool cond_b_set = false;
  bool cond_neighborhood = false;
  bool a_independent = false;  // informational; not required by either mode
  std::vector<ShiftWitness> witness_failures;

  bool valid() const { return cond_edges && cond_b_set && cond_neighborhood; }
};

// w_{ab}: all of a's weight moves to b along edge ab.
Weighting shift_edge(const Graph& g, const Weighting& w, int a, int b);

// Whichever of w_{ab}, w_{ba} has the smaller edge count (ties -> w_{ab});
// the smaller one never exceeds pi_2 of w.
Weighting katona_best_edge_shift(const Graph& g, const Weighting& w, int a, int b);

// Checks the shift conditions literally; throws on a malformed spec.
ShiftValidation validate_shift(const Graph& g, const Weighting& w, const ShiftSpec& spec,
                               ShiftMode mode = ShiftMode::Lemma3);

// Applies the simultaneous shift after validating; refuses (throws
// std::invalid_argument) when validation fails, because the k-clique
// inequality is only guaranteed under the conditions.
Weighting multi_shift(const Graph& g, const Weighting& w, const ShiftSpec& spec,
                      ShiftMode mode = ShiftMode::Lemma3);

// The explicit vertex map phi behind the shift inequality, applied to
// concrete blow-ups and machine-checked: phi must be a bijection
// V(G(w')) -> V(G(w)), every mapped k-clique of G(w') must be a k-clique
// of G(w), and the induced map on cliques must be injective.
struct InjectionCertificate {
  Weighting shifted;  // w'
  // phi as pairs ((v,i) in G(w')) -> ((u,j) in G(w)), ordered by source
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> vertex_map;
  bool phi_bijective = false;
  bool images_are_cliques = false;
  bool clique_map_injective = false;
  BigCount cliques_before = 0;  // |K_k(G(w))|
  BigCount cliques_after = 0;   // |K_k(G(w'))|

  bool ok() const { return phi_bijective && images_are_cliques && clique_map_injective; }
};

InjectionCertificate build_injection_certificate(const Graph& g, const Weighting& w,
                                                 const ShiftSpec& spec, int k,
                                                 ShiftMode mode = ShiftMode::Lemma3,
                                                 long long max_blowup = 25);

}  // namespace cliquemin

#endif  // CLIQUEMIN_SHIFT_HPP
