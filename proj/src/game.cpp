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

#include "domgame/game.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cctype>
#include <limits>
#include <string>
#include <vector>

#include "domgame/domination.hpp"
#include "domgame/errors.hpp"

namespace domgame {

const GameVariant& GameVariant::of(Variant v) {
  static const std::array<GameVariant, 5> rows = {
      GameVariant(Variant::dom, Neighborhood::closed, Neighborhood::closed, false, "dom"),
      GameVariant(Variant::total, Neighborhood::open, Neighborhood::open, false, "total"),
      GameVariant(Variant::z, Neighborhood::open, Neighborhood::closed, false, "z"),
      GameVariant(Variant::l, Neighborhood::closed, Neighborhood::open, true, "l"),
      GameVariant(Variant::ll, Neighborhood::closed, Neighborhood::open, false, "ll"),
  };
  return rows[static_cast<std::size_t>(v)];
}

Variant parse_variant(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  for (Variant v : kAllVariants) {
    if (GameVariant::of(v).name() == lower) return v;
  }
  throw InvalidArgument("unknown game variant '" + std::string(text) + "' (expected dom|total|z|l|ll)");
}

Player parse_player(std::string_view text) {
  if (text == "d" || text == "D" || text == "dominator") return Player::dominator;
  if (text == "s" || text == "S" || text == "staller") return Player::staller;
  throw InvalidArgument("unknown player '" + std::string(text) + "' (expected d|s)");
}

std::string_view player_name(Player p) noexcept { return p == Player::dominator ? "dominator" : "staller"; }

GameState GameState::initial(const Graph& g, Player first) { return {VertexSet(g.order()), VertexSet(g.order()), first}; }

GameState GameState::initial(const Graph& g, Player first, const VertexSet& covered) {
  if (covered.universe_size() != g.order()) {
    throw InvalidArgument("initial covered set universe " + std::to_string(covered.universe_size()) +
                          " does not match graph order " + std::to_string(g.order()));
  }
  return {covered, VertexSet(g.order()), first};
}

namespace {

void check_state(const Graph& g, const GameVariant& variant, const GameState& state) {
  require_isolate_free(g);
  if (state.covered.universe_size() != g.order() || state.stalled.universe_size() != g.order()) {
    throw InvalidArgument("game state universe does not match graph order " + std::to_string(g.order()));
  }
  if (!variant.forbid_repeat() && !state.stalled.empty()) {
    throw InvalidArgument("only the L game keeps a stalled set");
  }
  if (!(state.stalled & state.covered).empty()) {
    throw InvalidArgument("stalled vertices must lie outside the covered set");
  }
}

std::uint64_t legal_mask(const Graph& g, const GameVariant& variant, std::uint64_t covered, std::uint64_t stalled) {
  std::uint64_t out = 0;
  for (int v = 0; v < g.order(); ++v) {
    if ((variant.test_mask(g, v) & ~covered) != 0) out |= bit(v);
  }
  return variant.forbid_repeat() ? out & ~stalled : out;
}

}  // namespace

VertexSet legal_moves(const Graph& g, const GameVariant& variant, const GameState& state) {
  check_state(g, variant, state);
  return {g.order(), legal_mask(g, variant, state.covered.bits(), state.stalled.bits())};
}

GameState apply_move(const Graph& g, const GameVariant& variant, const GameState& state, int v) {
  check_state(g, variant, state);
  if (v < 0 || v >= g.order() || (legal_mask(g, variant, state.covered.bits(), state.stalled.bits()) & bit(v)) == 0) {
    throw IllegalMoveError("vertex " + std::to_string(v) + " is not a legal " + std::string(variant.name()) +
                           " move in this position");
  }
  const std::uint64_t covered = state.covered.bits() | variant.gain_mask(g, v);
  std::uint64_t stalled = 0;
  if (variant.forbid_repeat()) stalled = (state.stalled.bits() | bit(v)) & ~covered;
  return {VertexSet(g.order(), covered), VertexSet(g.order(), stalled), other(state.to_move)};
}

bool is_finished(const Graph& g, const GameVariant& variant, const GameState& state) {
  check_state(g, variant, state);
  return state.covered.is_full();
}

// ---------------------------------------------------------------------------
// Transposition tables

namespace {

/// Dense table indexed by the covered word; usable when the state has no
/// stalled component and 2^n bytes per player is affordable.
class DenseMemo {
 public:
  static constexpr int kMaxOrder = 22;

  explicit DenseMemo(int n) {
    for (auto& table : tables_) table.assign(std::size_t{1} << n, 0);
  }
  int find(std::uint64_t covered, int player) const {
    return static_cast<int>(tables_[static_cast<std::size_t>(player)][covered]) - 1;
  }
  void store(std::uint64_t covered, int player, int value) {
    tables_[static_cast<std::size_t>(player)][covered] = static_cast<std::uint8_t>(value + 1);
  }

 private:
  std::array<std::vector<std::uint8_t>, 2> tables_;
};

/// Open-addressing table keyed by (covered, stalled, player).
class HashMemo {
 public:
  HashMemo() { slots_.resize(kInitialCapacity); }

  int find(std::uint64_t covered, std::uint64_t stalled, int player) const {
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t i = hash(covered, stalled, player) & mask;; i = (i + 1) & mask) {
      const Slot& s = slots_[i];
      if (s.tag == 0) return -1;
      if (s.covered == covered && s.stalled == stalled && (s.tag >> 8) == static_cast<unsigned>(player)) {
        return static_cast<int>(s.tag & 0xff) - 1;
      }
    }
  }

  void store(std::uint64_t covered, std::uint64_t stalled, int player, int value) {
    if ((size_ + 1) * 10 > slots_.size() * 7) grow();
    place(Slot{covered, stalled, (static_cast<std::uint32_t>(player) << 8) | static_cast<std::uint32_t>(value + 1)});
    ++size_;
  }

 private:
  struct Slot {
    std::uint64_t covered = 0;
    std::uint64_t stalled = 0;
    std::uint32_t tag = 0;  // (player << 8) | (value + 1); 0 marks an empty slot
  };

  static constexpr std::size_t kInitialCapacity = 1 << 12;

  static std::size_t hash(std::uint64_t covered, std::uint64_t stalled, int player) {
    std::uint64_t x = covered * 0x9e3779b97f4a7c15ULL ^ (stalled + 0x632be59bd9b4e019ULL) * 0xc2b2ae3d27d4eb4fULL;
    x ^= static_cast<std::uint64_t>(player) << 63;
    x ^= x >> 31;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 29;
    return static_cast<std::size_t>(x);
  }

  void place(const Slot& slot) {
    const std::size_t mask = slots_.size() - 1;
    std::size_t i = hash(slot.covered, slot.stalled, static_cast<int>(slot.tag >> 8)) & mask;
    while (slots_[i].tag != 0) i = (i + 1) & mask;
    slots_[i] = slot;
  }

  void grow() {
    std::vector<Slot> old(slots_.size() * 2);
    old.swap(slots_);
    for (const Slot& s : old) {
      if (s.tag != 0) place(s);
    }
  }

  std::vector<Slot> slots_;
  std::size_t size_ = 0;
};

}  // namespace

// ---------------------------------------------------------------------------
// Solver

class GameSolver::Impl {
 public:
  Impl(const Graph& g, Variant variant, SolverOptions options)
      : n_(g.order()),
        full_(g.vertex_mask()),
        variant_(GameVariant::of(variant)),
        kernels_(options.kernels != nullptr ? *options.kernels : kernels::active_kernels()),
        cap_(options.max_memo_entries) {
    for (int v = 0; v < n_; ++v) {
      test_[static_cast<std::size_t>(v)] = variant_.test_mask(g, v);
      gain_[static_cast<std::size_t>(v)] = variant_.gain_mask(g, v);
    }
    if (!variant_.forbid_repeat() && n_ <= DenseMemo::kMaxOrder) {
      dense_.emplace(n_);
    }
  }

  int eval(std::uint64_t covered, std::uint64_t stalled, int player) {
    if (covered == full_) return 0;
    if (int cached = lookup(covered, stalled, player); cached >= 0) return cached;

    kernels::MoveScan scan;
    kernels_.scan_moves(test_.data(), gain_.data(), n_, covered, variant_.forbid_repeat() ? stalled : 0, scan);

    std::array<int, kMaxVertices> moves;
    int progressing = 0;
    bool has_null = false;
    int max_gain = 0;
    for (std::uint64_t rest = scan.legal; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const int gain = scan.gain[static_cast<std::size_t>(v)];
      if (gain == 0) {
        has_null = true;
        continue;
      }
      max_gain = std::max(max_gain, gain);
      // Insertion keeps descending gain, ascending index among ties.
      int pos = progressing++;
      while (pos > 0 && scan.gain[static_cast<std::size_t>(moves[static_cast<std::size_t>(pos - 1)])] < gain) {
        moves[static_cast<std::size_t>(pos)] = moves[static_cast<std::size_t>(pos - 1)];
        --pos;
      }
      moves[static_cast<std::size_t>(pos)] = v;
    }
    assert(progressing > 0 && "isolate-free graphs always admit a progressing move");

    const int uncovered = std::popcount(full_ & ~covered);
    const int lower_bound = (uncovered + max_gain - 1) / max_gain;

    int best;
    if (player == 0) {
      best = std::numeric_limits<int>::max();
      for (int i = 0; i < progressing; ++i) {
        const int v = moves[static_cast<std::size_t>(i)];
        best = std::min(best, 1 + child(covered, stalled, v, 1));
        if (best == lower_bound) break;
      }
      // In L a Dominator null move still changes the stalled set, so it is a
      // genuine option; in LL it never helps Dominator.
      if (variant_.forbid_repeat() && has_null && best > lower_bound) {
        for (std::uint64_t rest = scan.legal; rest != 0; rest &= rest - 1) {
          const int v = std::countr_zero(rest);
          if (scan.gain[static_cast<std::size_t>(v)] == 0) best = std::min(best, 1 + child(covered, stalled, v, 1));
        }
      }
    } else {
      best = 0;
      for (int i = 0; i < progressing; ++i) {
        best = std::max(best, 1 + child(covered, stalled, moves[static_cast<std::size_t>(i)], 0));
      }
      if (has_null) {
        if (variant_.forbid_repeat()) {
          for (std::uint64_t rest = scan.legal; rest != 0; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            if (scan.gain[static_cast<std::size_t>(v)] == 0) best = std::max(best, 1 + child(covered, stalled, v, 0));
          }
        } else {
          // LL: a null move hands the unchanged position to Dominator.
          best = std::max(best, 1 + eval(covered, 0, 0));
        }
      }
    }
    remember(covered, stalled, player, best);
    return best;
  }

  /// Value of playing v, counted from the position after the move.
  int child(std::uint64_t covered, std::uint64_t stalled, int v, int next_player) {
    const std::uint64_t next = covered | gain_[static_cast<std::size_t>(v)];
    const std::uint64_t next_stalled = variant_.forbid_repeat() ? (stalled | bit(v)) & ~next : 0;
    return eval(next, next_stalled, next_player);
  }

  /// Value of any legal move v, including LL null replays.
  int move_value(std::uint64_t covered, std::uint64_t stalled, int v, int player) {
    if (!variant_.forbid_repeat() && (gain_[static_cast<std::size_t>(v)] & ~covered) == 0) {
      return 1 + eval(covered, 0, 1 - player);
    }
    return 1 + child(covered, stalled, v, 1 - player);
  }

  std::uint64_t legal(std::uint64_t covered, std::uint64_t stalled) const {
    kernels::MoveScan scan;
    kernels_.scan_moves(test_.data(), gain_.data(), n_, covered, variant_.forbid_repeat() ? stalled : 0, scan);
    return scan.legal;
  }

  std::size_t entries() const noexcept { return entries_; }

 private:
  int lookup(std::uint64_t covered, std::uint64_t stalled, int player) const {
    return dense_ ? dense_->find(covered, player) : hash_.find(covered, stalled, player);
  }

  void remember(std::uint64_t covered, std::uint64_t stalled, int player, int value) {
    if (++entries_ > cap_) {
      throw ResourceLimitError("game solver memo exceeded " + std::to_string(cap_) + " entries");
    }
    if (dense_) {
      dense_->store(covered, player, value);
    } else {
      hash_.store(covered, stalled, player, value);
    }
  }

  int n_;
  std::uint64_t full_;
  const GameVariant& variant_;
  const kernels::KernelTable& kernels_;
  std::size_t cap_;
  std::array<std::uint64_t, kMaxVertices> test_{};
  std::array<std::uint64_t, kMaxVertices> gain_{};
  std::optional<DenseMemo> dense_;
  HashMemo hash_;
  std::size_t entries_ = 0;
};

GameSolver::GameSolver(const Graph& g, Variant variant, SolverOptions options)
    : graph_(g), variant_(variant) {
  require_isolate_free(g);
  impl_ = std::make_unique<Impl>(graph_, variant, options);
}

GameSolver::~GameSolver() = default;
GameSolver::GameSolver(GameSolver&&) noexcept = default;
GameSolver& GameSolver::operator=(GameSolver&&) noexcept = default;

int GameSolver::value(const GameState& state) {
  check_state(graph_, GameVariant::of(variant_), state);
  return impl_->eval(state.covered.bits(), state.stalled.bits(), state.to_move == Player::dominator ? 0 : 1);
}

int GameSolver::value(Player first) { return value(GameState::initial(graph_, first)); }

int GameSolver::best_move(const GameState& state) {
  check_state(graph_, GameVariant::of(variant_), state);
  if (state.covered.is_full()) throw InvalidArgument("the game is already finished");
  const int player = state.to_move == Player::dominator ? 0 : 1;
  const std::uint64_t covered = state.covered.bits();
  const std::uint64_t stalled = state.stalled.bits();
  const int target = impl_->eval(covered, stalled, player);
  for (std::uint64_t rest = impl_->legal(covered, stalled); rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    if (impl_->move_value(covered, stalled, v, player) == target) return v;
  }
  throw Error("no legal move attains the position value");
}

std::size_t GameSolver::memo_entries() const noexcept { return impl_->entries(); }

int game_value(const Graph& g, Variant variant, Player first, const std::optional<VertexSet>& initial_covered,
               SolverOptions options) {
  require_isolate_free(g);
  const GameState start =
      initial_covered ? GameState::initial(g, first, *initial_covered) : GameState::initial(g, first);
  GameSolver solver(g, variant, options);
  return solver.value(start);
}

int optimal_move(const Graph& g, Variant variant, const GameState& state, SolverOptions options) {
  GameSolver solver(g, variant, options);
  return solver.best_move(state);
}

InvariantProfile profile(const Graph& g, SolverOptions options) {
  require_isolate_free(g);
  InvariantProfile out;
  out.gamma = gamma(g);
  out.gamma_t = gamma_t(g);
  for (Variant v : kAllVariants) {
    GameSolver solver(g, v, options);
    for (Player first : {Player::dominator, Player::staller}) out.value(v, first) = solver.value(first);
  }
  return out;
}

}  // namespace domgame
