#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <random>

#include "cliquemin/corpus.hpp"
#include "cliquemin/families.hpp"
#include "cliquemin/graph.hpp"
#include "test_util.hpp"

using namespace cliquemin;
using namespace testutil;

TEST_CASE("graph construction validates simplicity") {
  Graph g(3);
  g.add_edge(0, 1);
  CHECK(g.has_edge(1, 0));
  CHECK(g.edge_count() == 1);
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 3), std::out_of_range);
  CHECK_THROWS_AS(Graph(65), std::invalid_argument);
  // duplicate labels rejected
  CHECK_THROWS_AS(g.set_labels({"a", "a", "b"}), std::invalid_argument);
}

TEST_CASE("enumerate_cliques: worked examples") {
  // complete graph has exactly one n-clique
  CliqueSet k3 = enumerate_cliques(complete_graph(3), 3);
  REQUIRE(k3.members.size() == 1);
  CHECK(k3.members[0] == VertexSet{0, 1, 2});

  // the prism's only triangles are its two faces
  CliqueSet prism3 = enumerate_cliques(prism_graph(), 3);
  REQUIRE(prism3.members.size() == 2);
  CHECK(prism3.members[0] == VertexSet{0, 1, 2});
  CHECK(prism3.members[1] == VertexSet{3, 4, 5});

  // sum of 2^(3-|X|)-1 over X in 2^[3] gives 19 strict containments
  SpernerGraph b3 = build_sperner(3);
  CHECK(enumerate_cliques(b3.graph, 2).members.size() == 19);
  CHECK(b3.graph.edge_count() == 19);

  CHECK(enumerate_cliques(complete_graph(3), 5).members.empty());
  CHECK_THROWS_AS(enumerate_cliques(complete_graph(3), 0), std::invalid_argument);
}

TEST_CASE("enumerate_cliques matches the naive subset scan") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(rng() % 12);
    Graph g = random_graph(rng, n, 0.15 * static_cast<double>(rng() % 7));
    int k = 1 + static_cast<int>(rng() % 5);
    auto naive = naive_cliques(g, k);
    std::sort(naive.begin(), naive.end());  // the scan emits colex, the library lex
    CliqueSet found = enumerate_cliques(g, k);
    REQUIRE(found.members == naive);
    CHECK(std::is_sorted(found.members.begin(), found.members.end()));
    CHECK(count_k_cliques(g, k) == naive.size());
  }
  for (const Graph& g : all_graphs_up_to(4)) {
    for (int k = 1; k <= 4; ++k) {
      auto naive = naive_cliques(g, k);
      std::sort(naive.begin(), naive.end());
      CHECK(enumerate_cliques(g, k).members == naive);
    }
  }
}

TEST_CASE("is_independent") {
  Graph prism = prism_graph();
  CHECK(is_independent(prism, {2}));               // singletons always
  CHECK_FALSE(is_independent(prism, {0, 1, 2}));   // a triangle face
  CHECK(is_independent(prism, {0, 4}));
  SpernerGraph b3 = build_sperner(3);
  CHECK(is_independent(b3.graph, b3.level_vertices(1)));  // equal-size sets incomparable
  CHECK_THROWS_AS(is_independent(prism, {0, 6}), std::out_of_range);
}

TEST_CASE("max_independent_set: worked examples and lexicographic ties") {
  CHECK(max_independent_set(edgeless_graph(5)) == VertexSet{0, 1, 2, 3, 4});

  SpernerGraph b3 = build_sperner(3);
  // both full levels have size 3 = C(3,2); the level of singletons wins the
  // tie-break because it comes first in the canonical vertex order
  CHECK(max_independent_set(b3.graph) == VertexSet{1, 2, 3});

  // brute force over all vertex subsets gives alpha(prism) = 2
  Graph prism = prism_graph();
  CHECK(naive_alpha(prism) == 2);
  CHECK(max_independent_set(prism) == VertexSet{0, 4});
}

TEST_CASE("max_independent_set matches the naive subset scan") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 80; ++trial) {
    int n = 1 + static_cast<int>(rng() % 10);
    Graph g = random_graph(rng, n, 0.12 * static_cast<double>(rng() % 8));
    VertexSet found = max_independent_set(g);
    CHECK(static_cast<int>(found.size()) == naive_alpha(g));
    CHECK(is_independent(g, found));
    CHECK(std::is_sorted(found.begin(), found.end()));
  }
}

TEST_CASE("alpha of the subset-lattice graph is the middle binomial") {
  for (int n = 1; n <= 5; ++n) {
    SpernerGraph b = build_sperner(n);
    auto alpha = static_cast<long long>(max_independent_set(b.graph).size());
    CHECK(BigCount(alpha) == binomial(n, (n + 1) / 2));
  }
}

TEST_CASE("max_k_clique_independent_set: worked examples") {
  // the whole 3-vertex path is 3-clique independent
  CHECK(max_k_clique_independent_set(path_graph(3), 3) == VertexSet{0, 1, 2});

  // brute force: {{}, {1}, {2}} has no 3-chain and nothing of size 4 works
  SpernerGraph b2 = build_sperner(2);
  CHECK(naive_alpha_k(b2.graph, 3) == 3);
  CHECK(max_k_clique_independent_set(b2.graph, 3) == VertexSet{0, 1, 2});

  CHECK(max_k_clique_independent_set(complete_graph(4), 2) == VertexSet{0});
  CHECK_THROWS_AS(max_k_clique_independent_set(path_graph(3), 1), std::invalid_argument);
}

TEST_CASE("k-clique independence matches the naive scan; k=2 equals alpha") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    Graph g = random_graph(rng, n, 0.12 * static_cast<double>(rng() % 8));
    for (int k = 2; k <= 4; ++k) {
      CHECK(k_clique_independence_number(g, k) == naive_alpha_k(g, k));
      VertexSet found = max_k_clique_independent_set(g, k);
      CHECK(static_cast<int>(found.size()) == naive_alpha_k(g, k));
      CHECK(is_k_clique_independent(g, set_to_mask(found), k));
    }
    CHECK(max_k_clique_independent_set(g, 2).size() == max_independent_set(g).size());
  }
}

TEST_CASE("elimination orderings: worked examples") {
  // trees are chordal
  Graph tree(6);
  tree.add_edge(0, 1);
  tree.add_edge(0, 2);
  tree.add_edge(2, 3);
  tree.add_edge(2, 4);
  tree.add_edge(4, 5);
  auto peo = find_elimination_ordering(tree);
  REQUIRE(peo.has_value());
  CHECK(is_valid_elimination_ordering(tree, *peo));

  CHECK_FALSE(find_elimination_ordering(cycle_graph(4)).has_value());

  auto k4 = find_elimination_ordering(complete_graph(4));
  REQUIRE(k4.has_value());
  CHECK(is_valid_elimination_ordering(complete_graph(4), *k4));
}

TEST_CASE("chordality agrees with trying every ordering") {
  for (const Graph& g : all_graphs_up_to(5)) {
    bool expected = naive_chordal(g);
    auto peo = find_elimination_ordering(g);
    CHECK(peo.has_value() == expected);
    if (peo) CHECK(is_valid_elimination_ordering(g, *peo));
  }
}

TEST_CASE("is_connected") {
  CHECK(is_connected(path_graph(4)));
  CHECK(is_connected(complete_graph(1)));
  CHECK_FALSE(is_connected(edgeless_graph(2)));
  Graph two_parts(4);
  two_parts.add_edge(0, 1);
  two_parts.add_edge(2, 3);
  CHECK_FALSE(is_connected(two_parts));
}

TEST_CASE("graph hash is structure-stable") {
  Graph a = path_graph(3), b = path_graph(3);
  CHECK(graph_hash(a) == graph_hash(b));
  b.add_edge(0, 2);
  CHECK(graph_hash(a) != graph_hash(b));
  CHECK(same_edges(a, path_graph(3)));
  CHECK_FALSE(same_edges(a, b));
}
