// Copyright 2026 The domgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <random>

#include "domgame/constructions.hpp"
#include "domgame/domination.hpp"
#include "domgame/errors.hpp"
#include "domgame/graph_catalog.hpp"
#include "support/brute_force.hpp"

using namespace domgame;

namespace {

Graph random_graph(int n, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng() % 2) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace

TEST_CASE("lexicographic product") {
  CHECK(canonical_form(lexicographic_product(complete(2), empty_graph(2))) == canonical_form(cycle(4)));
  CHECK(lexicographic_product(path(2), complete(2)) == complete(4));
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_graph(1 + static_cast<int>(rng() % 5), rng);
    const Graph h = random_graph(1 + static_cast<int>(rng() % 5), rng);
    const Graph p = lexicographic_product(g, h);
    REQUIRE(p.order() == g.order() * h.order());
    for (int a = 0; a < p.order(); ++a) {
      for (int b = 0; b < p.order(); ++b) {
        const int g1 = a / h.order(), h1 = a % h.order(), g2 = b / h.order(), h2 = b % h.order();
        const bool expected = a != b && ((g1 != g2 && g.has_edge(g1, g2)) || (g1 == g2 && h1 != h2 && h.has_edge(h1, h2)));
        CHECK(p.has_edge(a, b) == expected);
      }
    }
  }
  CHECK_THROWS_AS(lexicographic_product(complete(9), complete(8)), InvalidArgument);
}

TEST_CASE("cartesian product") {
  CHECK(canonical_form(cartesian_product(complete(2), complete(2))) == canonical_form(cycle(4)));
  const Graph grid = cartesian_product(path(2), path(3));
  CHECK(grid.edge_count() == 7);
  CHECK(grid.degree(1) == 3);
  CHECK(grid.degree(0) == 2);
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_graph(1 + static_cast<int>(rng() % 5), rng);
    const Graph h = random_graph(1 + static_cast<int>(rng() % 5), rng);
    const Graph box = cartesian_product(g, h);
    const Graph lex = lexicographic_product(g, h);
    REQUIRE(box.order() == lex.order());
    for (int x = 0; x < box.order(); ++x) {
      CHECK(box.degree(x) == g.degree(x / h.order()) + h.degree(x % h.order()));
      for (int y : box.open_neighborhood(x)) CHECK(lex.has_edge(x, y));
    }
  }
}

TEST_CASE("complement") {
  CHECK(complement(complete(5)) == empty_graph(5));
  const Graph c5 = cycle(5);
  CHECK(canonical_form(complement(c5)) == canonical_form(c5));
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_graph(1 + static_cast<int>(rng() % 9), rng);
    CHECK(complement(complement(g)) == g);
  }
}

TEST_CASE("hat construction") {
  CHECK(hat_pendants_per_support(3) == 3);
  CHECK(hat_pendants_per_support(4) == 4);
  const Graph hat3 = hat_construction(path(3));
  CHECK(hat3.order() == 16);
  CHECK(hat_construction(cycle(4)).order() == 25);
  VertexSet expected_supp(16, {0, 1, 2, 3});
  CHECK(support_vertices(hat3) == expected_supp);
  CHECK(has_supportive_dominating_set(hat3));
  for (int v = 0; v < 3; ++v) CHECK(hat3.has_edge(3, v));
  for (int s = 0; s <= 3; ++s) CHECK(pendant_neighbors(hat3, s).size() == 3);
  CHECK(satisfies_pendant_theorem_hypothesis(hat3));
  CHECK(satisfies_pendant_theorem_hypothesis(hat_construction(complete(4))));
  CHECK_THROWS_AS(hat_construction(path(2)), InvalidArgument);
  CHECK_THROWS_AS(hat_construction(Graph::from_edges(4, std::vector<Edge>{{0, 1}, {2, 3}})), InvalidArgument);
  CHECK(hat_construction(path(9)).order() == 60);
  CHECK_THROWS_AS(hat_construction(path(10)), InvalidArgument);  // 11 * 6 = 66 vertices
}

TEST_CASE("bridge graphs") {
  const Graph g33 = bridge_graph(3, 3);
  CHECK(g33.order() == 6);
  CHECK(g33.edge_count() == 8);
  CHECK(bridge_graph(3, 4).order() == 7);
  for (int m = 3; m <= 5; ++m) {
    for (int n = 3; n <= 5; ++n) CHECK(total_domination_number(bridge_graph(m, n)).value == oracle::min_dominating(bridge_graph(m, n), true));
  }
  CHECK(oracle::min_dominating(g33, true) == 2);
  CHECK_THROWS_AS(bridge_graph(2, 3), InvalidArgument);
}
