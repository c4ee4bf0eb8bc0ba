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
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "domgame/vertex_set.hpp"

namespace domgame {

enum class Neighborhood { open, closed };

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1, stored as one adjacency word
/// per vertex. Immutable once built; safe to share between threads.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on `n` vertices.
  explicit Graph(int n);

  /// Loops are rejected; repeated edges collapse.
  static Graph from_edges(int n, std::span<const Edge> edges);

  /// Adjacency words must be symmetric, loop-free and inside the universe.
  static Graph from_adjacency(std::vector<std::uint64_t> adjacency);

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  int edge_count() const noexcept;
  std::vector<Edge> edges() const;

  /// Raw words for hot loops. `open_mask(v)` is N(v).
  std::uint64_t open_mask(int v) const noexcept { return adj_[static_cast<std::size_t>(v)]; }
  std::uint64_t closed_mask(int v) const noexcept { return adj_[static_cast<std::size_t>(v)] | bit(v); }
  std::uint64_t vertex_mask() const noexcept { return low_bits(order()); }
  std::span<const std::uint64_t> adjacency() const noexcept { return adj_; }

  bool has_edge(int u, int v) const;
  int degree(int v) const;
  int min_degree() const noexcept;
  int max_degree() const noexcept;

  VertexSet open_neighborhood(int v) const;
  VertexSet closed_neighborhood(int v) const;
  VertexSet neighborhood_of_set(const VertexSet& s, Neighborhood mode) const;
  VertexSet vertices() const { return VertexSet::full(order()); }

  bool is_isolate_free() const noexcept;
  bool is_connected() const noexcept;

  /// G - v with the remaining vertices renumbered in increasing order.
  Graph remove_vertex(int v) const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;

  std::vector<std::uint64_t> adj_;
};

/// Throws IsolatedVertexError naming the first isolated vertex, if any.
void require_isolate_free(const Graph& g);

enum class Family { path, cycle, complete, star, empty, cycle_power };

Family parse_family(std::string_view name);

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
/// K_{1,k}; the center is vertex 0.
Graph star(int k);
/// Edgeless graph on n vertices.
Graph empty_graph(int n);
/// C_N^n: i ~ j iff their circular distance is at most n.
Graph cycle_power(int big_n, int n);

/// Dispatch on a family with its integer parameters
/// (path/cycle/complete/empty: {n}; star: {k}; cycle_power: {N, n}).
Graph generate(Family family, std::span<const int> params);

}  // namespace domgame
