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

#include "domgame/graph.hpp"

#include <algorithm>
#include <string>

#include "domgame/errors.hpp"

namespace domgame {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw InvalidArgument("graph order " + std::to_string(n) + " exceeds the " +
                          std::to_string(kMaxVertices) + "-vertex cap");
  }
}

}  // namespace

Graph::Graph(int n) {
  check_order(n);
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InvalidArgument("edge " + std::to_string(u) + "-" + std::to_string(v) +
                            " has a vertex index outside [0, " + std::to_string(n) + ")");
    }
    if (u == v) throw InvalidArgument("loop at vertex " + std::to_string(u));
    g.adj_[static_cast<std::size_t>(u)] |= bit(v);
    g.adj_[static_cast<std::size_t>(v)] |= bit(u);
  }
  return g;
}

Graph Graph::from_adjacency(std::vector<std::uint64_t> adjacency) {
  const int n = static_cast<int>(adjacency.size());
  check_order(n);
  for (int v = 0; v < n; ++v) {
    const std::uint64_t row = adjacency[static_cast<std::size_t>(v)];
    if ((row & ~low_bits(n)) != 0) throw InvalidArgument("adjacency word outside the vertex universe");
    if ((row & bit(v)) != 0) throw InvalidArgument("loop at vertex " + std::to_string(v));
    for (std::uint64_t rest = row; rest != 0; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      if ((adjacency[static_cast<std::size_t>(u)] & bit(v)) == 0) {
        throw InvalidArgument("adjacency is not symmetric at " + std::to_string(u) + "-" +
                              std::to_string(v));
      }
    }
  }
  Graph g;
  g.adj_ = std::move(adjacency);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= order()) {
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range for a graph of order " +
                          std::to_string(order()));
  }
}

int Graph::edge_count() const noexcept {
  int twice = 0;
  for (std::uint64_t row : adj_) twice += std::popcount(row);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u) {
    for (std::uint64_t rest = open_mask(u) & ~low_bits(u + 1); rest != 0; rest &= rest - 1) {
      out.emplace_back(u, std::countr_zero(rest));
    }
  }
  return out;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (open_mask(u) & bit(v)) != 0;
}

int Graph::degree(int v) const {
  check_vertex(v);
  return std::popcount(open_mask(v));
}

int Graph::min_degree() const noexcept {
  int best = order() == 0 ? 0 : kMaxVertices;
  for (std::uint64_t row : adj_) best = std::min(best, std::popcount(row));
  return best;
}

int Graph::max_degree() const noexcept {
  int best = 0;
  for (std::uint64_t row : adj_) best = std::max(best, std::popcount(row));
  return best;
}

VertexSet Graph::open_neighborhood(int v) const {
  check_vertex(v);
  return {order(), open_mask(v)};
}

VertexSet Graph::closed_neighborhood(int v) const {
  check_vertex(v);
  return {order(), closed_mask(v)};
}

VertexSet Graph::neighborhood_of_set(const VertexSet& s, Neighborhood mode) const {
  if (s.universe_size() != order()) {
    throw InvalidArgument("vertex set universe " + std::to_string(s.universe_size()) +
                          " does not match graph order " + std::to_string(order()));
  }
  std::uint64_t out = 0;
  for (int v : s) out |= open_mask(v);
  if (mode == Neighborhood::closed) out |= s.bits();
  return {order(), out};
}

bool Graph::is_isolate_free() const noexcept {
  return std::none_of(adj_.begin(), adj_.end(), [](std::uint64_t row) { return row == 0; });
}

bool Graph::is_connected() const noexcept {
  if (order() == 0) return true;
  std::uint64_t seen = 1;
  std::uint64_t frontier = 1;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t rest = frontier; rest != 0; rest &= rest - 1) {
      next |= open_mask(std::countr_zero(rest));
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == vertex_mask();
}

Graph Graph::remove_vertex(int v) const {
  check_vertex(v);
  const std::uint64_t below = low_bits(v);
  auto squeeze = [&](std::uint64_t row) { return (row & below) | ((row >> 1) & ~below); };
  std::vector<std::uint64_t> rows;
  rows.reserve(adj_.size() - 1);
  for (int u = 0; u < order(); ++u) {
    if (u != v) rows.push_back(squeeze(open_mask(u) & ~bit(v)));
  }
  Graph g;
  g.adj_ = std::move(rows);
  return g;
}

void require_isolate_free(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.open_mask(v) == 0) {
      throw IsolatedVertexError("vertex " + std::to_string(v) + " is isolated; the games need an isolate-free graph");
    }
  }
}

Family parse_family(std::string_view name) {
  if (name == "path") return Family::path;
  if (name == "cycle") return Family::cycle;
  if (name == "complete") return Family::complete;
  if (name == "star") return Family::star;
  if (name == "empty") return Family::empty;
  if (name == "cycle_power") return Family::cycle_power;
  throw InvalidArgument("unknown graph family '" + std::string(name) + "'");
}

Graph path(int n) {
  if (n < 1) throw InvalidArgument("path needs n >= 1");
  check_order(n);
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

Graph cycle(int n) {
  if (n < 3) throw InvalidArgument("cycle needs n >= 3");
  return cycle_power(n, 1);
}

Graph complete(int n) {
  if (n < 1) throw InvalidArgument("complete graph needs n >= 1");
  check_order(n);
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) rows[static_cast<std::size_t>(v)] = low_bits(n) & ~bit(v);
  return Graph::from_adjacency(std::move(rows));
}

Graph star(int k) {
  if (k < 1) throw InvalidArgument("star needs k >= 1");
  check_order(k + 1);
  std::vector<Edge> edges;
  for (int leaf = 1; leaf <= k; ++leaf) edges.emplace_back(0, leaf);
  return Graph::from_edges(k + 1, edges);
}

Graph empty_graph(int n) {
  if (n < 1) throw InvalidArgument("empty graph needs n >= 1");
  return Graph(n);
}

Graph cycle_power(int big_n, int n) {
  if (big_n < 3 || n < 1) throw InvalidArgument("cycle power needs N >= 3 and n >= 1");
  check_order(big_n);
  std::vector<Edge> edges;
  for (int i = 0; i < big_n; ++i) {
    for (int j = i + 1; j < big_n; ++j) {
      const int d = std::min(j - i, big_n - (j - i));
      if (d <= n) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(big_n, edges);
}

Graph generate(Family family, std::span<const int> params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw InvalidArgument("family expects " + std::to_string(count) + " parameter(s), got " +
                            std::to_string(params.size()));
    }
  };
  switch (family) {
    case Family::path: need(1); return path(params[0]);
    case Family::cycle: need(1); return cycle(params[0]);
    case Family::complete: need(1); return complete(params[0]);
    case Family::star: need(1); return star(params[0]);
    case Family::empty: need(1); return empty_graph(params[0]);
    case Family::cycle_power: need(2); return cycle_power(params[0], params[1]);
  }
  throw InvalidArgument("unknown graph family");
}

}  // namespace domgame
