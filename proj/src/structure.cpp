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

#include "domgame/structure.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_map>

#include "domgame/errors.hpp"
#include "domgame/kernels.hpp"

namespace domgame {

std::vector<std::pair<int, int>> find_twins(const Graph& g, TwinKind kind) {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      const bool twins = kind == TwinKind::true_twins ? g.closed_mask(u) == g.closed_mask(v)
                                                      : g.open_mask(u) == g.open_mask(v);
      if (twins) out.emplace_back(u, v);
    }
  }
  return out;
}

bool is_claw_center(const Graph& g, int v) {
  const std::uint64_t around = g.open_neighborhood(v).bits();
  for (std::uint64_t a = around; a != 0; a &= a - 1) {
    const int x = std::countr_zero(a);
    // Neighbors of v after x that are non-adjacent to x.
    const std::uint64_t rest = around & ~g.closed_mask(x) & ~low_bits(x + 1);
    for (std::uint64_t b = rest; b != 0; b &= b - 1) {
      const int y = std::countr_zero(b);
      if ((rest & ~g.closed_mask(y) & ~low_bits(y + 1)) != 0) return true;
    }
  }
  return false;
}

bool is_claw_free(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (is_claw_center(g, v)) return false;
  }
  return true;
}

bool is_weakly_claw_free(const Graph& g) {
  std::uint64_t centers = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (is_claw_center(g, v)) centers |= bit(v);
  }
  for (int u = 0; u < g.order(); ++u) {
    if ((g.open_mask(u) & ~centers) == 0) return false;
  }
  return true;
}

std::optional<int> has_Z_configuration(const Graph& g, const VertexSet& dominated) {
  if (dominated.universe_size() != g.order()) {
    throw InvalidArgument("dominated set universe does not match graph order " + std::to_string(g.order()));
  }
  const std::uint64_t a = dominated.bits();
  for (std::uint64_t rest = g.vertex_mask() & ~a; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    if ((g.open_mask(v) & ~a) != 0) continue;
    bool all_wide = true;
    for (std::uint64_t nb = g.open_mask(v); nb != 0 && all_wide; nb &= nb - 1) {
      all_wide = std::popcount(g.open_mask(std::countr_zero(nb)) & ~a) >= 2;
    }
    if (all_wide) return v;
  }
  return std::nullopt;
}

std::optional<ZSensitivityWitness> find_Z_sensitivity(const Graph& g, int max_order) {
  require_isolate_free(g);
  if (g.order() > max_order) {
    throw ResourceLimitError("Z-insensitivity check is exhaustive and capped at order " + std::to_string(max_order) +
                             "; got " + std::to_string(g.order()));
  }
  const int n = g.order();
  std::vector<std::uint64_t> closed(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) closed[static_cast<std::size_t>(v)] = g.closed_mask(v);
  const auto& kern = kernels::active_kernels();

  // Breadth-first over the distinct images N[D]; each image keeps the first
  // (smallest) D that produced it.
  std::unordered_map<std::uint64_t, std::uint64_t> generator;
  generator.reserve(std::size_t{1} << std::min(n, 16));
  std::vector<std::uint64_t> frontier = {0};
  generator.emplace(0, 0);
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t image : frontier) {
      const std::uint64_t played = generator.at(image);
      if (auto v = has_Z_configuration(g, VertexSet(n, image))) {
        return ZSensitivityWitness{VertexSet(n, played), VertexSet(n, image), *v};
      }
      for (int v = 0; v < n; ++v) {
        if ((played >> v) & 1u) continue;
        const std::uint64_t grown_played = played | bit(v);
        const std::uint64_t grown = kern.union_of(closed.data(), n, grown_played);
        if (generator.emplace(grown, grown_played).second) next.push_back(grown);
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

bool is_Z_insensitive(const Graph& g, int max_order) { return !find_Z_sensitivity(g, max_order).has_value(); }

}  // namespace domgame
