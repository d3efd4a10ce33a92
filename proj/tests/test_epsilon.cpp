#include <random>
#include <vector>

#include "doctest.h"
#include "skewproj/canonical.hpp"
#include "skewproj/codes.hpp"
#include "skewproj/epsilon.hpp"
#include "skewproj/errors.hpp"
#include "test_helpers.hpp"

using namespace skewproj;
using namespace testutil;

TEST_CASE("epsilon matrix entries stay symmetric with unit diagonal") {
  EpsilonMatrix e(3);
  CHECK(e.at(0, 0) == 1);
  CHECK(e.at(1, 2) == 1);
  e.set(1, 2, -1);
  CHECK(e.at(1, 2) == -1);
  CHECK(e.at(2, 1) == -1);
  e.set(2, 1, 1);
  CHECK(e.at(1, 2) == 1);
  CHECK_THROWS_AS(e.set(1, 1, -1), input_error);
  CHECK_THROWS_AS(e.set(0, 1, 0), input_error);
}

TEST_CASE("graph of epsilon keeps the positive pairs") {
  EpsilonMatrix e(3);
  e.set(0, 2, -1);
  e.set(1, 2, -1);
  CHECK(graph_of_epsilon(e) == graph1(3, {{1, 2}}));
  std::mt19937 rng(67);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = random_graph(1 + int(rng() % 8), rng);
    CHECK(graph_of_epsilon(epsilon_of_graph(g)) == g);
  }
}

TEST_CASE("doubled algebra of one commuting pair") {
  EpsilonMatrix e(2);  // edge 1-2
  EpsilonMatrix d = doubled_algebra(e);
  REQUIRE(d.size() == 4);
  // Diagonal blocks copy e.
  CHECK(d.at(0, 1) == 1);
  CHECK(d.at(2, 3) == 1);
  // Cross block negates off-diagonal entries, keeps +1 on its diagonal.
  CHECK(d.at(0, 2) == 1);
  CHECK(d.at(1, 3) == 1);
  CHECK(d.at(0, 3) == -1);
  CHECK(d.at(1, 2) == -1);
}

TEST_CASE("doubled algebra of one variable") {
  EpsilonMatrix d = doubled_algebra(EpsilonMatrix(1));
  REQUIRE(d.size() == 2);
  CHECK(d.at(0, 1) == 1);
  CHECK(graph_of_epsilon(d) == complete(2));
}

TEST_CASE("doubled algebra graph is the switching graph, label for label") {
  for (int n = 1; n <= 4; ++n)
    for (AdjCode code = 0; code < (AdjCode(1) << pair_count(n)); ++code) {
      Graph g = decode(n, code);
      CHECK(graph_of_epsilon(doubled_algebra(epsilon_of_graph(g))) ==
            switching_graph(g));
    }
  std::mt19937 rng(71);
  for (int n = 5; n <= 6; ++n)
    for (int trial = 0; trial < 100; ++trial) {
      Graph g = random_graph(n, rng);
      CHECK(graph_of_epsilon(doubled_algebra(epsilon_of_graph(g))) ==
            switching_graph(g));
    }
  CHECK_THROWS_AS(doubled_algebra(EpsilonMatrix(9)), input_error);
}

TEST_CASE("doubling commutes with relabeling the generators") {
  std::mt19937 rng(73);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + int(rng() % 8);
    Graph g = random_graph(n, rng);
    auto p = random_perm(n, rng);
    std::vector<int> lifted(2 * n);
    for (int u = 0; u < n; ++u) {
      lifted[u] = p[u];
      lifted[u + n] = p[u] + n;
    }
    Graph doubled = graph_of_epsilon(doubled_algebra(epsilon_of_graph(g)));
    Graph doubled_rel =
        graph_of_epsilon(doubled_algebra(epsilon_of_graph(relabel(g, p))));
    CHECK(doubled_rel == relabel(doubled, lifted));
  }
}

TEST_CASE("algebra isomorphism is an equivalence relation") {
  std::vector<EpsilonMatrix> all;
  int n = 3;
  for (AdjCode code = 0; code < (AdjCode(1) << pair_count(n)); ++code)
    all.push_back(epsilon_of_graph(decode(n, code)));
  for (const auto& a : all) {
    CHECK(algebras_isomorphic(a, a));
    for (const auto& b : all) {
      CHECK(algebras_isomorphic(a, b) == algebras_isomorphic(b, a));
      for (const auto& c : all)
        if (algebras_isomorphic(a, b) && algebras_isomorphic(b, c))
          CHECK(algebras_isomorphic(a, c));
    }
  }
}

TEST_CASE("algebra isomorphism witnesses") {
  EpsilonMatrix edge12 = epsilon_of_graph(graph1(3, {{1, 2}}));
  EpsilonMatrix edge13 = epsilon_of_graph(graph1(3, {{1, 3}}));
  EpsilonMatrix commuting = epsilon_of_graph(complete(3));
  auto p = algebra_isomorphism(edge12, edge13);
  REQUIRE(p.has_value());
  CHECK(relabel(graph_of_epsilon(edge12), *p) == graph_of_epsilon(edge13));
  CHECK_FALSE(algebra_isomorphism(edge12, commuting).has_value());
  CHECK_FALSE(algebras_isomorphic(edge12, EpsilonMatrix(2)));
}
