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
#include "domgame/game.hpp"
#include "domgame/graph_catalog.hpp"
#include "support/brute_force.hpp"

using namespace domgame;

namespace {

oracle::Game oracle_game(Variant v) {
  switch (v) {
    case Variant::dom: return oracle::Game::dom;
    case Variant::total: return oracle::Game::total;
    case Variant::z: return oracle::Game::z;
    case Variant::l: return oracle::Game::l;
    case Variant::ll: return oracle::Game::ll;
  }
  return oracle::Game::dom;
}

const GameVariant& rules(Variant v) { return GameVariant::of(v); }

}  // namespace

TEST_CASE("variant table") {
  CHECK(rules(Variant::dom).test() == Neighborhood::closed);
  CHECK(rules(Variant::dom).gain() == Neighborhood::closed);
  CHECK(rules(Variant::total).test() == Neighborhood::open);
  CHECK(rules(Variant::total).gain() == Neighborhood::open);
  CHECK(rules(Variant::z).test() == Neighborhood::open);
  CHECK(rules(Variant::z).gain() == Neighborhood::closed);
  CHECK(rules(Variant::l).test() == Neighborhood::closed);
  CHECK(rules(Variant::l).gain() == Neighborhood::open);
  CHECK(rules(Variant::l).forbid_repeat());
  CHECK_FALSE(rules(Variant::ll).forbid_repeat());
  CHECK(parse_variant("ll") == Variant::ll);
  CHECK(parse_variant("Z") == Variant::z);
  CHECK_THROWS_AS(parse_variant("zz"), InvalidArgument);
  CHECK(parse_player("s") == Player::staller);
  CHECK(parse_player("dominator") == Player::dominator);
  CHECK_THROWS_AS(parse_player("x"), InvalidArgument);
}

TEST_CASE("legal moves") {
  const Graph p3 = path(3);
  GameState s = GameState::initial(p3, Player::dominator);
  CHECK(legal_moves(p3, rules(Variant::z), s) == VertexSet(3, {0, 1, 2}));
  s = apply_move(p3, rules(Variant::z), s, 1);
  CHECK(s.covered == VertexSet::full(3));
  CHECK(legal_moves(p3, rules(Variant::z), s).empty());
  CHECK(is_finished(p3, rules(Variant::z), s));

  const Graph k2 = path(2);
  GameState ll = apply_move(k2, rules(Variant::ll), GameState::initial(k2, Player::dominator), 0);
  CHECK(ll.covered == VertexSet(2, {1}));
  CHECK(legal_moves(k2, rules(Variant::ll), ll) == VertexSet(2, {0, 1}));
  const GameState after_null = apply_move(k2, rules(Variant::ll), ll, 0);
  CHECK(after_null.covered == VertexSet(2, {1}));
  CHECK_FALSE(is_finished(k2, rules(Variant::ll), after_null));
  CHECK(after_null.to_move == Player::dominator);
}

TEST_CASE("apply move") {
  const Graph p5 = path(5);
  CHECK(apply_move(p5, rules(Variant::dom), GameState::initial(p5, Player::dominator), 2).covered ==
        VertexSet(5, {1, 2, 3}));
  const Graph k2 = path(2);
  const GameState l = apply_move(k2, rules(Variant::l), GameState::initial(k2, Player::dominator), 0);
  CHECK(l.covered == VertexSet(2, {1}));
  CHECK(l.stalled == VertexSet(2, {0}));
  CHECK(legal_moves(k2, rules(Variant::l), l) == VertexSet(2, {1}));
  CHECK_THROWS_AS(apply_move(k2, rules(Variant::l), l, 0), IllegalMoveError);
  const Graph p3 = path(3);
  CHECK(apply_move(p3, rules(Variant::total), GameState::initial(p3, Player::dominator), 0).covered ==
        VertexSet(3, {1}));
  GameState finished = GameState::initial(p3, Player::dominator, VertexSet::full(3));
  CHECK(is_finished(p3, rules(Variant::dom), finished));
  CHECK_THROWS_AS(apply_move(p3, rules(Variant::dom), finished, 0), IllegalMoveError);
}

TEST_CASE("state validation") {
  CHECK_THROWS_AS(legal_moves(Graph::from_edges(3, std::vector<Edge>{{0, 1}}), rules(Variant::z),
                              GameState::initial(Graph(3), Player::dominator)),
                  IsolatedVertexError);
  CHECK_THROWS_AS(game_value(Graph(2), Variant::dom, Player::dominator), IsolatedVertexError);
  CHECK_THROWS_AS(game_value(path(3), Variant::dom, Player::dominator, VertexSet(4)), InvalidArgument);
}

TEST_CASE("spot values") {
  CHECK(game_value(path(6), Variant::dom, Player::dominator) == 3);
  CHECK(game_value(path(6), Variant::z, Player::dominator) == 3);
  const Graph grid = cartesian_product(path(2), path(3));
  CHECK(game_value(grid, Variant::z, Player::dominator) == 3);
  CHECK(game_value(grid, Variant::dom, Player::dominator) == 3);
  const Graph k2 = path(2);
  CHECK(game_value(k2, Variant::ll, Player::dominator) == 3);
  CHECK(game_value(k2, Variant::l, Player::dominator) == 2);
  CHECK(game_value(k2, Variant::z, Player::dominator) == 1);
  CHECK(game_value(k2, Variant::total, Player::dominator) == 2);
  CHECK(game_value(star(3), Variant::z, Player::staller) == 2);
  CHECK(game_value(path(7), Variant::z, Player::dominator) == 3);
}

TEST_CASE("optimal moves") {
  const Graph p7 = path(7);
  const GameState start = GameState::initial(p7, Player::dominator);
  const int v = optimal_move(p7, Variant::z, start);
  GameSolver solver(p7, Variant::z);
  CHECK(1 + solver.value(apply_move(p7, rules(Variant::z), start, v)) == 3);
  CHECK(optimal_move(complete(5), Variant::dom, GameState::initial(complete(5), Player::dominator)) == 0);
  const Graph k2 = path(2);
  GameState ll{VertexSet(2, {1}), VertexSet(2), Player::staller};
  CHECK(optimal_move(k2, Variant::ll, ll) == 0);
  CHECK_THROWS_AS(optimal_move(k2, Variant::ll, GameState::initial(k2, Player::dominator, VertexSet::full(2))),
                  InvalidArgument);
}

TEST_CASE("partially dominated starts") {
  const Graph p5 = path(5);
  CHECK(game_value(p5, Variant::dom, Player::dominator, VertexSet(5, {0, 1, 2})) == 1);
  CHECK(game_value(p5, Variant::dom, Player::dominator, VertexSet::full(5)) == 0);
  for (const Graph& g : connected_graphs(4)) {
    for (Variant v : kAllVariants) {
      oracle::BruteForceGame brute(g, oracle_game(v));
      for (std::uint64_t bits = 0; bits < 16; ++bits) {
        const VertexSet a(4, bits);
        for (Player first : {Player::dominator, Player::staller}) {
          REQUIRE(game_value(g, v, first, a) == brute.value(first == Player::dominator, a.members()));
        }
      }
    }
  }
}

TEST_CASE("profile values") {
  const InvariantProfile p6 = profile(path(6));
  CHECK(p6.gamma_t == 4);
  CHECK(p6.value(Variant::dom, Player::dominator) == 3);
  CHECK(p6.value(Variant::z, Player::dominator) == 3);
  const InvariantProfile k2 = profile(path(2));
  CHECK(k2.value(Variant::total, Player::dominator) == 2);
  CHECK(k2.value(Variant::ll, Player::dominator) == 3);
}

TEST_CASE("memo cap aborts with a resource error") {
  SolverOptions tiny;
  tiny.max_memo_entries = 1;
  CHECK_THROWS_AS(game_value(path(6), Variant::l, Player::dominator, std::nullopt, tiny), ResourceLimitError);
  CHECK_THROWS_AS(game_value(path(6), Variant::dom, Player::dominator, std::nullopt, tiny), ResourceLimitError);
}

TEST_CASE("brute force agreement on connected graphs up to order 5") {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      for (Variant v : kAllVariants) {
        oracle::BruteForceGame brute(g, oracle_game(v));
        GameSolver solver(g, v);
        for (Player first : {Player::dominator, Player::staller}) {
          CAPTURE(n);
          CAPTURE(static_cast<int>(v));
          REQUIRE(solver.value(first) == brute.value(first == Player::dominator));
        }
      }
    }
  }
}

TEST_CASE("hierarchy and bounds on random graphs") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_isolate_free_graph(4 + trial % 7, 0.35, rng);
    const InvariantProfile p = profile(g);
    for (Player f : {Player::dominator, Player::staller}) {
      CHECK(p.value(Variant::z, f) <= p.value(Variant::dom, f));
      CHECK(p.value(Variant::dom, f) <= p.value(Variant::l, f));
      CHECK(p.value(Variant::l, f) <= p.value(Variant::ll, f));
      CHECK(p.value(Variant::z, f) <= p.value(Variant::total, f));
      CHECK(p.value(Variant::total, f) <= p.value(Variant::l, f));
    }
    const Player d = Player::dominator;
    CHECK(p.gamma <= p.value(Variant::z, d));
    CHECK(p.value(Variant::dom, d) <= 2 * p.gamma - 1);
    CHECK(p.gamma_t <= p.value(Variant::total, d));
    CHECK(p.value(Variant::ll, d) <= 2 * p.gamma_t - 1);
  }
}

TEST_CASE("best move realizes the value along a whole game") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_isolate_free_graph(5 + trial % 5, 0.35, rng);
    for (Variant v : kAllVariants) {
      GameSolver solver(g, v);
      GameState s = GameState::initial(g, Player::dominator);
      const int target = solver.value(s);
      int moves = 0;
      while (!is_finished(g, rules(v), s)) {
        s = apply_move(g, rules(v), s, solver.best_move(s));
        ++moves;
        REQUIRE(moves <= 2 * g.order() + 2);
      }
      CHECK(moves == target);
    }
  }
}
