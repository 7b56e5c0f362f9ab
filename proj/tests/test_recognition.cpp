#include <doctest.h>

#include <random>

#include "minorobs/codec.hpp"
#include "minorobs/enumerate.hpp"
#include "minorobs/minors.hpp"
#include "minorobs/recognition.hpp"
#include "oracles.hpp"

using namespace minorobs;

namespace {

Graph diamond() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

Graph butterfly() {
  return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

}  // namespace

TEST_CASE("pseudoforest membership") {
  CHECK(is_pseudoforest(Graph::cycle(5)));
  CHECK(!is_pseudoforest(diamond()));
  // Forest of three trees.
  Graph forest(7, {{0, 1}, {0, 2}, {3, 4}});
  CHECK(is_pseudoforest(forest));
  CHECK(is_pseudoforest(Graph()));
  CHECK(is_pseudoforest(
      Graph::disjoint_union(Graph::cycle(3), Graph::cycle(4))));
  CHECK(!is_pseudoforest(Graph::complete(4)));
}

TEST_CASE("apex-pseudoforest membership and witness") {
  CHECK(is_apex_pseudoforest(butterfly()));
  // Deleting the shared vertex 2 leaves two disjoint edges, but deleting
  // vertex 0 already leaves a single unicyclic component, so the smallest
  // witness is 0.
  CHECK(apex_pseudoforest_witness(butterfly()) == 0);
  CHECK(is_pseudoforest(butterfly().delete_vertex(2)));

  CHECK(is_apex_pseudoforest(Graph::wheel(7)));
  // Only the hub (vertex 7) can be the apex of a 7-wheel.
  CHECK(apex_pseudoforest_witness(Graph::wheel(7)) == 7);

  Graph o0_1 = Graph::disjoint_union(diamond(), diamond());
  CHECK(!is_apex_pseudoforest(o0_1));
  CHECK(!apex_pseudoforest_witness(o0_1).has_value());

  CHECK(is_apex_pseudoforest(Graph()));
  CHECK(!apex_pseudoforest_witness(Graph()).has_value());
  CHECK(is_apex_pseudoforest(Graph(1)));
}

TEST_CASE("k-apex by exhaustive deletion") {
  CHECK(!is_k_apex(Graph::complete(5), pseudoforest_class(), 1));
  CHECK(is_k_apex(Graph::complete(5), pseudoforest_class(), 2));
  CHECK(is_k_apex(Graph(), pseudoforest_class(), 0));
  CHECK(is_k_apex(Graph(), pseudoforest_class(), 3));
  CHECK_THROWS_AS(is_k_apex(Graph(1), pseudoforest_class(), -1),
                  std::invalid_argument);

  GraphEnumerator enumerator(false);
  for (int n = 1; n <= 7; ++n)
    for (const std::string& form : enumerator.level(n)) {
      Graph g = decode_graph6(form);
      CHECK(is_k_apex(g, pseudoforest_class(), 0) == is_pseudoforest(g));
    }
}

TEST_CASE("apex test equals 1-apex exhaustively") {
  GraphEnumerator enumerator(false);
  for (int n = 1; n <= 7; ++n)
    for (const std::string& form : enumerator.level(n)) {
      Graph g = decode_graph6(form);
      CHECK(is_apex_pseudoforest(g) == is_k_apex(g, pseudoforest_class(), 1));
    }
}

TEST_CASE("membership is monotone under taking minors") {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> order(2, 9);
  int members_seen = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    int n = order(rng);
    std::bernoulli_distribution edge(0.35);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (edge(rng)) edges.emplace_back(u, v);
    Graph g(n, edges);
    if (!is_apex_pseudoforest(g)) continue;
    ++members_seen;
    for (const Graph& minor : oracles::raw_one_step_minors(g))
      CHECK(is_apex_pseudoforest(minor));
  }
  CHECK(members_seen > 100);  // the sample actually exercised the property
}

TEST_CASE("pseudoforests are exactly the diamond- and butterfly-free graphs") {
  std::vector<Graph> obstructions{diamond(), butterfly()};
  GraphEnumerator enumerator(false);
  for (int n = 1; n <= 7; ++n)
    for (const std::string& form : enumerator.level(n)) {
      Graph g = decode_graph6(form);
      bool minor_free = !contains_any_minor(g, obstructions).has_value();
      CHECK(is_pseudoforest(g) == minor_free);
    }
}
