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

#include <optional>
#include <utility>
#include <vector>

#include "domgame/graph.hpp"

namespace domgame {

enum class TwinKind {
  true_twins,   // N[u] = N[v]
  false_twins,  // N(u) = N(v)
};

/// All unordered twin pairs (u < v), sorted lexicographically.
std::vector<std::pair<int, int>> find_twins(const Graph& g, TwinKind kind);

/// N(v) contains three pairwise non-adjacent vertices.
bool is_claw_center(const Graph& g, int v);
bool is_claw_free(const Graph& g);

/// Every vertex has a neighbor that is not a claw center. Graphs with an
/// isolated vertex are never weakly claw-free.
bool is_weakly_claw_free(const Graph& g);

/// Smallest v ∉ A with N(v) ⊆ A and |N(u) \ A| >= 2 for each u ∈ N(v).
std::optional<int> has_Z_configuration(const Graph& g, const VertexSet& dominated);

struct ZSensitivityWitness {
  VertexSet played;     // D
  VertexSet dominated;  // N[D]
  int vertex;           // Z-configuration center in G|N[D]
};

inline constexpr int kDefaultZInsensitiveCap = 20;

/// First D (breadth-first over distinct N[D], smallest D first) whose
/// G|N[D] has a Z-configuration. Requires an isolate-free graph of order
/// <= max_order; larger inputs throw ResourceLimitError.
std::optional<ZSensitivityWitness> find_Z_sensitivity(const Graph& g, int max_order = kDefaultZInsensitiveCap);

bool is_Z_insensitive(const Graph& g, int max_order = kDefaultZInsensitiveCap);

}  // namespace domgame
