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

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>

#include "domgame/graph.hpp"
#include "domgame/kernels.hpp"

namespace domgame {

enum class Variant { dom, total, z, l, ll };
inline constexpr std::array<Variant, 5> kAllVariants = {Variant::dom, Variant::total, Variant::z, Variant::l,
                                                        Variant::ll};

enum class Player { dominator, staller };
inline constexpr Player other(Player p) noexcept {
  return p == Player::dominator ? Player::staller : Player::dominator;
}

/// Rule row of one of the five games: which neighborhood must still contain
/// an uncovered vertex for a move to be legal, which neighborhood the move
/// covers, and whether replays are forbidden.
///
///   DOM   closed test, closed gain
///   TOTAL open test,   open gain
///   Z     open test,   closed gain
///   L     closed test, open gain, no vertex played twice
///   LL    closed test, open gain
class GameVariant {
 public:
  static const GameVariant& of(Variant v);

  Variant id() const noexcept { return id_; }
  Neighborhood test() const noexcept { return test_; }
  Neighborhood gain() const noexcept { return gain_; }
  bool forbid_repeat() const noexcept { return forbid_repeat_; }
  /// Games with open gain end at total domination, the others at domination.
  std::string_view name() const noexcept { return name_; }

  std::uint64_t test_mask(const Graph& g, int v) const noexcept {
    return test_ == Neighborhood::closed ? g.closed_mask(v) : g.open_mask(v);
  }
  std::uint64_t gain_mask(const Graph& g, int v) const noexcept {
    return gain_ == Neighborhood::closed ? g.closed_mask(v) : g.open_mask(v);
  }

 private:
  constexpr GameVariant(Variant id, Neighborhood test, Neighborhood gain, bool forbid_repeat, std::string_view name)
      : id_(id), test_(test), gain_(gain), forbid_repeat_(forbid_repeat), name_(name) {}

  Variant id_;
  Neighborhood test_;
  Neighborhood gain_;
  bool forbid_repeat_;
  std::string_view name_;
};

/// Accepts dom|total|z|l|ll (any case).
Variant parse_variant(std::string_view text);
/// Accepts d|s|dominator|staller.
Player parse_player(std::string_view text);
std::string_view player_name(Player p) noexcept;

/// Position of a game in progress.
///
/// `covered` is the union of the gain neighborhoods played so far (the set A
/// of a partially dominated start G|A included). `stalled` is used by the L
/// game only: vertices already played that are still outside `covered`.
/// Played vertices inside `covered` can never be legal again, so they are
/// dropped from the state.
struct GameState {
  VertexSet covered;
  VertexSet stalled;
  Player to_move = Player::dominator;

  static GameState initial(const Graph& g, Player first);
  static GameState initial(const Graph& g, Player first, const VertexSet& covered);

  bool operator==(const GameState&) const = default;
};

VertexSet legal_moves(const Graph& g, const GameVariant& variant, const GameState& state);
GameState apply_move(const Graph& g, const GameVariant& variant, const GameState& state, int v);
bool is_finished(const Graph& g, const GameVariant& variant, const GameState& state);

inline constexpr std::size_t kDefaultMemoCap = std::size_t{1} << 26;

struct SolverOptions {
  /// Exceeding this many memo entries throws ResourceLimitError.
  std::size_t max_memo_entries = kDefaultMemoCap;
  /// nullptr selects kernels::active_kernels().
  const kernels::KernelTable* kernels = nullptr;
};

/// Exact minimax over covered-set states with a private transposition table.
/// Dominator minimizes and Staller maximizes the number of moves still to be
/// played. One solver may answer many queries on the same graph and variant;
/// it is not thread-safe, but independent solvers may run concurrently.
class GameSolver {
 public:
  GameSolver(const Graph& g, Variant variant, SolverOptions options = {});
  ~GameSolver();
  GameSolver(GameSolver&&) noexcept;
  GameSolver& operator=(GameSolver&&) noexcept;

  /// Optimal number of moves still to be played from `state`.
  int value(const GameState& state);
  /// Value of the game started from scratch (or from G|covered).
  int value(Player first);

  /// Smallest-index legal move attaining value(state). Throws on a finished state.
  int best_move(const GameState& state);

  std::size_t memo_entries() const noexcept;

 private:
  class Impl;
  std::unique_ptr<Impl> impl_;
  Graph graph_;
  Variant variant_;
};

/// γ_g, γ_tg, γ_Zg, γ_Lg, γ_LLg (first = dominator) and the primed values
/// (first = staller). `initial_covered` seeds a partially dominated start.
int game_value(const Graph& g, Variant variant, Player first,
               const std::optional<VertexSet>& initial_covered = std::nullopt, SolverOptions options = {});

int optimal_move(const Graph& g, Variant variant, const GameState& state, SolverOptions options = {});

/// γ, γ_t and all ten game values of one graph.
struct InvariantProfile {
  int gamma = 0;
  int gamma_t = 0;
  std::array<std::array<int, 2>, 5> values{};

  int value(Variant v, Player first) const noexcept {
    return values[static_cast<std::size_t>(v)][static_cast<std::size_t>(first)];
  }
  int& value(Variant v, Player first) noexcept {
    return values[static_cast<std::size_t>(v)][static_cast<std::size_t>(first)];
  }
};

InvariantProfile profile(const Graph& g, SolverOptions options = {});

}  // namespace domgame
