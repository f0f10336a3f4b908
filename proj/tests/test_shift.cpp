#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cliquemin/corpus.hpp"
#include "cliquemin/families.hpp"
#include "cliquemin/shift.hpp"
#include "test_util.hpp"

using namespace cliquemin;
using namespace testutil;

TEST_CASE("shift_edge: worked examples") {
  Graph path = path_graph(3);
  Weighting w({3, 3, 3});
  CHECK(shift_edge(path, w, 1, 0).values() == std::vector<long long>{6, 0, 3});
  CHECK_THROWS_AS(shift_edge(path, w, 0, 2), std::invalid_argument);  // not an edge

  // moving zero weight changes nothing
  Weighting zero_at_a({0, 2, 1});
  CHECK(shift_edge(path, zero_at_a, 0, 1) == zero_at_a);

  // total weight is always conserved
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = random_graph(rng, 5, 0.6);
    if (g.edge_count() == 0) continue;
    Weighting random = random_weighting(rng, 5, 8);
    auto [a, b] = g.edges()[rng() % g.edges().size()];
    CHECK(shift_edge(g, random, a, b).total() == random.total());
  }
}

TEST_CASE("katona_best_edge_shift: worked examples and guarantee") {
  // tie on a single edge: w_ab wins
  Graph edge = path_graph(2);
  CHECK(katona_best_edge_shift(edge, Weighting({1, 1}), 0, 1).values() ==
        std::vector<long long>{0, 2});

  // path with unit weights: shifting toward the endpoint is better
  Graph path = path_graph(3);
  Weighting unit({1, 1, 1});
  CHECK(count_edges_formula(path, unit) == 2);
  Weighting best = katona_best_edge_shift(path, unit, 0, 1);
  CHECK(best.values() == std::vector<long long>{2, 0, 1});
  CHECK(count_edges_formula(path, best) == 1);

  // star: both directions checked, the better one keeps pi_2 <= 3
  Graph star = star_graph(3);
  Weighting star_unit({1, 1, 1, 1});
  Weighting star_best = katona_best_edge_shift(star, star_unit, 0, 1);
  CHECK(count_edges_formula(star, star_best) <= count_edges_formula(star, star_unit));

  // the guarantee on every edge of a small corpus
  std::mt19937 rng(17);
  for (const Graph& g : all_graphs_up_to(4)) {
    if (g.edge_count() == 0) continue;
    Weighting w = random_weighting(rng, g.vertex_count(), 6);
    for (auto [a, b] : g.edges()) {
      BigCount before = count_edges_formula(g, w);
      CHECK(count_edges_formula(g, katona_best_edge_shift(g, w, a, b)) <= before);
    }
  }
}

TEST_CASE("validate_shift: worked examples") {
  SpernerGraph b3 = build_sperner(3);
  Weighting unit_b3(std::vector<long long>(8, 1));

  // pair each singleton with a superset two levels up the lattice order:
  // {1}->{1,2}, {2}->{2,3}, {3}->{1,3} keeps targets distinct
  ShiftSpec level_shift;
  level_shift.a_list = {1, 2, 3};
  level_shift.b_list = {4, 6, 5};
  ShiftValidation v = validate_shift(b3.graph, unit_b3, level_shift, ShiftMode::Lemma3);
  CHECK(v.valid());
  CHECK(v.a_independent);

  // a broken pairing is caught with a witness
  ShiftSpec broken;
  broken.a_list = {1};
  broken.b_list = {2};  // {1} and {2} are incomparable
  ShiftValidation bad = validate_shift(b3.graph, unit_b3, broken, ShiftMode::Lemma3);
  CHECK_FALSE(bad.cond_edges);
  REQUIRE(bad.witness_failures.size() >= 1);
  CHECK(bad.witness_failures[0].condition == "edges");
  CHECK(bad.witness_failures[0].pair_index == 1);

  // prism, all weights positive: the matched partner keeps outer-triangle
  // neighbours that the inner vertex does not have
  Graph prism = prism_graph();
  ShiftSpec matching_pair;
  matching_pair.a_list = {0};
  matching_pair.b_list = {3};
  ShiftValidation prism_check =
      validate_shift(prism, Weighting({1, 1, 1, 1, 1, 1}), matching_pair, ShiftMode::Lemma3);
  CHECK_FALSE(prism_check.cond_neighborhood);
  CHECK(prism_check.cond_edges);
  CHECK(prism_check.cond_b_set);
  // the failure disappears once the offending neighbours carry no weight
  ShiftValidation zeros_check =
      validate_shift(prism, Weighting({1, 1, 1, 1, 0, 0}), matching_pair, ShiftMode::Lemma3);
  CHECK(zeros_check.valid());

  CHECK_THROWS_AS(validate_shift(prism, Weighting({1, 1, 1, 1, 1, 1}),
                                 ShiftSpec{{0, 0}, {3, 4}}, ShiftMode::Lemma3),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_shift(prism, Weighting({1, 1, 1, 1, 1, 1}),
                                 ShiftSpec{{0}, {0}}, ShiftMode::Lemma3),
                  std::invalid_argument);
}

TEST_CASE("validate_shift: relaxed mode tolerates fully joined pairs") {
  Graph k4 = complete_graph(4);
  Weighting unit({1, 1, 1, 1});
  ShiftSpec spec{{0, 1}, {2, 3}};
  CHECK_FALSE(validate_shift(k4, unit, spec, ShiftMode::Lemma3).cond_b_set);
  ShiftValidation relaxed = validate_shift(k4, unit, spec, ShiftMode::Lemma4);
  CHECK(relaxed.valid());
  CHECK_FALSE(relaxed.a_independent);  // flagged for audit, not an error

  for (int k = 2; k <= 4; ++k) {
    BigCount before = count_cliques_formula(k4, unit, k);
    BigCount after = count_cliques_formula(k4, multi_shift(k4, unit, spec, ShiftMode::Lemma4), k);
    CHECK(after <= before);
  }
}

TEST_CASE("multi_shift: worked examples") {
  SpernerGraph b2 = build_sperner(2);
  Weighting unit({1, 1, 1, 1});
  ShiftSpec empty_to_singleton{{0}, {1}};  // vertex 0 is {}, vertex 1 is {1}
  Weighting shifted = multi_shift(b2.graph, unit, empty_to_singleton);
  CHECK(shifted.values() == std::vector<long long>{0, 2, 1, 1});
  CHECK(count_edges_formula(b2.graph, unit) == 5);
  CHECK(count_edges_formula(b2.graph, shifted) == 4);

  // empty spec is the identity
  CHECK(multi_shift(b2.graph, unit, ShiftSpec{}) == unit);

  // complete bipartite 2+2: merging one side into the other
  Graph k22 = build_multipartite(MultipartiteSpec::of({2, 2}));
  ShiftSpec merge{{2, 3}, {0, 1}};
  Weighting k22_unit({1, 1, 1, 1});
  Weighting merged = multi_shift(k22, k22_unit, merge);
  CHECK(merged.values() == std::vector<long long>{2, 2, 0, 0});
  for (int k = 2; k <= 3; ++k)
    CHECK(count_cliques_formula(k22, merged, k) <= count_cliques_formula(k22, k22_unit, k));

  // invalid specs are refused outright
  Graph prism = prism_graph();
  CHECK_THROWS_AS(multi_shift(prism, Weighting({1, 1, 1, 1, 1, 1}), ShiftSpec{{0}, {3}}),
                  std::invalid_argument);
}

TEST_CASE("single-edge shifts can only increase the prism's triangle count") {
  Graph prism = prism_graph();
  Weighting unit({1, 1, 1, 1, 1, 1});
  REQUIRE(count_cliques_formula(prism, unit, 3) == 2);
  // triangle edges give 3, matching edges give 4: every direction increases
  for (auto [u, v] : prism.edges()) {
    bool matching_edge = (v - u) == 3;
    BigCount expected = matching_edge ? 4 : 3;
    CHECK(count_cliques_formula(prism, shift_edge(prism, unit, u, v), 3) == expected);
    CHECK(count_cliques_formula(prism, shift_edge(prism, unit, v, u), 3) == expected);
  }
}

TEST_CASE("valid shifts never increase any clique count") {
  // sampled over the structured families where validity is guaranteed
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    MultipartiteSpec spec = MultipartiteSpec::of(
        {1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 2)});
    Graph g = build_multipartite(spec);
    Weighting w = random_weighting(rng, g.vertex_count(), 2 + rng() % 7);
    VertexSet last = spec.part_vertices(spec.part_count());
    VertexSet first = spec.part_vertices(1);
    ShiftSpec shift;
    shift.a_list = last;
    shift.b_list.assign(first.begin(), first.begin() + last.size());
    Weighting after = multi_shift(g, w, shift);
    CHECK(after.total() == w.total());
    for (int k = 2; k <= 4; ++k)
      CHECK(count_cliques_formula(g, after, k) <= count_cliques_formula(g, w, k));
  }
}

TEST_CASE("injection certificate: worked examples") {
  SpernerGraph b2 = build_sperner(2);
  Weighting unit({1, 1, 1, 1});
  InjectionCertificate cert =
      build_injection_certificate(b2.graph, unit, ShiftSpec{{0}, {1}}, 2);
  CHECK(cert.ok());
  CHECK(cert.cliques_before == 5);
  CHECK(cert.cliques_after == 4);
  CHECK(cert.vertex_map.size() == 4);

  // empty spec: phi is the identity
  InjectionCertificate identity = build_injection_certificate(b2.graph, unit, ShiftSpec{}, 2);
  CHECK(identity.ok());
  CHECK(identity.cliques_before == identity.cliques_after);
  for (const auto& [from, to] : identity.vertex_map) CHECK(from == to);

  // full level-1 lift on the 3-element lattice with unit weights
  SpernerGraph b3 = build_sperner(3);
  Weighting unit_b3(std::vector<long long>(8, 1));
  ShiftSpec level_shift;
  level_shift.a_list = {1, 2, 3};
  level_shift.b_list = {4, 6, 5};
  InjectionCertificate lifted =
      build_injection_certificate(b3.graph, unit_b3, level_shift, 3);
  CHECK(lifted.ok());
  CHECK(lifted.cliques_after <= lifted.cliques_before);
  CHECK(lifted.cliques_before == count_cliques_formula(b3.graph, unit_b3, 3));
  CHECK(lifted.cliques_after == count_cliques_formula(b3.graph, lifted.shifted, 3));
}

TEST_CASE("certificate counts always agree with the formula") {
  std::mt19937 rng(29);
  int verified = 0;
  while (verified < 25) {
    int n = 3 + static_cast<int>(rng() % 3);
    Graph g = random_graph(rng, n, 0.5);
    if (g.edge_count() == 0) continue;
    Weighting w = random_weighting(rng, n, 2 + rng() % 9);
    auto [a, b] = g.edges()[rng() % g.edges().size()];
    ShiftSpec spec{{a}, {b}};
    if (!validate_shift(g, w, spec).valid()) continue;
    int k = 2 + static_cast<int>(rng() % 3);
    InjectionCertificate cert = build_injection_certificate(g, w, spec, k);
    CHECK(cert.ok());
    CHECK(cert.cliques_before == count_cliques_formula(g, w, k));
    CHECK(cert.cliques_after == count_cliques_formula(g, cert.shifted, k));
    CHECK(cert.cliques_after <= cert.cliques_before);
    ++verified;
  }
}
