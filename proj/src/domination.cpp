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

#include "domgame/domination.hpp"

#include <algorithm>
#include <bit>

#include "domgame/errors.hpp"

namespace domgame {

namespace {

/// Branch and bound for the smallest S ⊆ allowed with forced ⊆ S whose
/// (open or closed) neighborhood covers every vertex.
class DominatingSetSearch {
 public:
  DominatingSetSearch(const Graph& g, Neighborhood mode) : g_(g), n_(g.order()), mode_(mode) {
    masks_.resize(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) {
      masks_[static_cast<std::size_t>(v)] = mode == Neighborhood::closed ? g.closed_mask(v) : g.open_mask(v);
    }
  }

  /// Smallest feasible size, or -1 if none is <= limit. On success the
  /// witness is stored in best_set().
  int solve(std::uint64_t allowed, std::uint64_t forced, int limit) {
    best_size_ = limit + 1;
    best_set_ = 0;
    allowed_ = allowed | forced;
    std::uint64_t covered = 0;
    for (std::uint64_t rest = forced; rest != 0; rest &= rest - 1) covered |= mask(std::countr_zero(rest));
    descend(forced, covered, std::popcount(forced));
    return best_size_ <= limit ? best_size_ : -1;
  }

  std::uint64_t best_set() const { return best_set_; }

 private:
  std::uint64_t mask(int v) const { return masks_[static_cast<std::size_t>(v)]; }

  std::uint64_t dominators_of(int u) const {
    const std::uint64_t around = mode_ == Neighborhood::closed ? g_.closed_mask(u) : g_.open_mask(u);
    return around & allowed_;
  }

  void descend(std::uint64_t chosen, std::uint64_t covered, int size) {
    const std::uint64_t uncovered = g_.vertex_mask() & ~covered;
    if (uncovered == 0) {
      if (size < best_size_) {
        best_size_ = size;
        best_set_ = chosen;
      }
      return;
    }
    if (size + 1 >= best_size_) return;

    int max_gain = 0;
    for (std::uint64_t rest = allowed_ & ~chosen; rest != 0; rest &= rest - 1) {
      max_gain = std::max(max_gain, std::popcount(mask(std::countr_zero(rest)) & uncovered));
    }
    if (max_gain == 0) return;
    const int remaining = std::popcount(uncovered);
    if (size + (remaining + max_gain - 1) / max_gain >= best_size_) return;

    // Branch on the uncovered vertex with the fewest candidate dominators;
    // a single candidate is forced.
    int pivot = -1;
    int fewest = kMaxVertices + 1;
    for (std::uint64_t rest = uncovered; rest != 0; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      const int options = std::popcount(dominators_of(u) & ~chosen);
      if (options < fewest) {
        fewest = options;
        pivot = u;
        if (options <= 1) break;
      }
    }
    if (fewest == 0) return;

    std::uint64_t candidates = dominators_of(pivot) & ~chosen;
    while (candidates != 0) {
      // Larger gains first tighten the bound sooner.
      int pick = -1;
      int pick_gain = -1;
      for (std::uint64_t rest = candidates; rest != 0; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        const int gain = std::popcount(mask(v) & uncovered);
        if (gain > pick_gain) {
          pick_gain = gain;
          pick = v;
        }
      }
      candidates &= ~bit(pick);
      descend(chosen | bit(pick), covered | mask(pick), size + 1);
      if (size + 1 >= best_size_) return;
    }
  }

  const Graph& g_;
  int n_;
  Neighborhood mode_;
  std::vector<std::uint64_t> masks_;
  std::uint64_t allowed_ = 0;
  int best_size_ = 0;
  std::uint64_t best_set_ = 0;
};

int optimum(const Graph& g, Neighborhood mode) {
  if (g.order() == 0) return 0;
  DominatingSetSearch search(g, mode);
  return search.solve(g.vertex_mask(), 0, g.order());
}

DominationResult certified_optimum(const Graph& g, Neighborhood mode) {
  DominationResult result;
  result.certificate.kind = mode == Neighborhood::closed ? DominationKind::dominating
                                                         : DominationKind::total_dominating;
  if (g.order() == 0) {
    result.certificate.set = VertexSet(0);
    return result;
  }
  DominatingSetSearch search(g, mode);
  const int k = search.solve(g.vertex_mask(), 0, g.order());
  // Fix membership from the highest vertex down, excluding each vertex
  // whenever an optimum survives without it: this yields the smallest mask.
  std::uint64_t allowed = g.vertex_mask();
  std::uint64_t forced = 0;
  for (int v = g.order() - 1; v >= 0; --v) {
    const std::uint64_t without = allowed & ~bit(v);
    if (search.solve(without, forced, k) == k) {
      allowed = without;
    } else {
      forced |= bit(v);
    }
  }
  result.value = k;
  result.certificate.set = VertexSet(g.order(), forced);
  result.certificate.size = k;
  return result;
}

int ceil_log2(int x) {
  int k = 0;
  while ((1 << k) < x) ++k;
  return k;
}

}  // namespace

bool DominationCertificate::validates(const Graph& g) const {
  if (set.universe_size() != g.order() || set.size() != size) return false;
  const auto mode = kind == DominationKind::dominating ? Neighborhood::closed : Neighborhood::open;
  return g.neighborhood_of_set(set, mode).is_full();
}

DominationResult domination_number(const Graph& g) { return certified_optimum(g, Neighborhood::closed); }

DominationResult total_domination_number(const Graph& g) {
  require_isolate_free(g);
  return certified_optimum(g, Neighborhood::open);
}

int gamma(const Graph& g) { return optimum(g, Neighborhood::closed); }

int gamma_t(const Graph& g) {
  require_isolate_free(g);
  return optimum(g, Neighborhood::open);
}

VertexSet pendant_neighbors(const Graph& g, int v) {
  std::uint64_t out = 0;
  for (int u : g.open_neighborhood(v)) {
    if (std::popcount(g.open_mask(u)) == 1) out |= bit(u);
  }
  return {g.order(), out};
}

VertexSet support_vertices(const Graph& g) {
  std::uint64_t out = 0;
  for (int u = 0; u < g.order(); ++u) {
    if (std::popcount(g.open_mask(u)) == 1) out |= g.open_mask(u);
  }
  return {g.order(), out};
}

bool has_supportive_dominating_set(const Graph& g) {
  return g.neighborhood_of_set(support_vertices(g), Neighborhood::closed).is_full();
}

bool satisfies_pendant_theorem_hypothesis(const Graph& g) {
  if (g.order() < 3) throw InvalidArgument("pendant theorem hypothesis needs n(G) >= 3");
  if (!g.is_connected()) throw InvalidArgument("pendant theorem hypothesis needs a connected graph");
  if (!has_supportive_dominating_set(g)) return false;
  const int need = ceil_log2(gamma(g)) + 1;
  for (int s : support_vertices(g)) {
    if (pendant_neighbors(g, s).size() < need) return false;
  }
  return true;
}

}  // namespace domgame
