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

#include <cstdint>
#include <random>
#include <vector>

#include "domgame/graph.hpp"

namespace domgame {

inline constexpr int kMaxCatalogOrder = 8;

/// Canonical relabeling: isomorphic graphs map to identical graphs.
/// Exhaustive over color-refined cells, so meant for small orders.
Graph canonical_form(const Graph& g);

/// One representative per isomorphism class of order n (n <= 8), in
/// canonical labeling, sorted by graph6.
std::vector<Graph> all_graphs(int n);

/// Connected members of all_graphs(n).
std::vector<Graph> connected_graphs(int n);

/// Connected graphs of every order in [min_order, max_order].
std::vector<Graph> connected_graphs(int min_order, int max_order);

/// G(n, p) conditioned on having no isolated vertex (n >= 2).
Graph random_isolate_free_graph(int n, double edge_probability, std::mt19937_64& rng);

}  // namespace domgame
