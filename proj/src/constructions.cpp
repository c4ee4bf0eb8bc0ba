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

#include "domgame/constructions.hpp"

#include <string>

#include "domgame/errors.hpp"

namespace domgame {

namespace {

int product_order(const Graph& g, const Graph& h) {
  const long long order = static_cast<long long>(g.order()) * h.order();
  if (order > kMaxVertices) {
    throw InvalidArgument("product order " + std::to_string(order) + " exceeds the " +
                          std::to_string(kMaxVertices) + "-vertex cap");
  }
  return static_cast<int>(order);
}

template <typename Adjacent>
Graph build_product(const Graph& g, const Graph& h, Adjacent adjacent) {
  const int order = product_order(g, h);
  const int nh = h.order();
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(order), 0);
  for (int a = 0; a < order; ++a) {
    for (int b = a + 1; b < order; ++b) {
      if (adjacent(a / nh, a % nh, b / nh, b % nh)) {
        rows[static_cast<std::size_t>(a)] |= bit(b);
        rows[static_cast<std::size_t>(b)] |= bit(a);
      }
    }
  }
  return Graph::from_adjacency(std::move(rows));
}

int ceil_log2(int x) {
  int k = 0;
  while ((1 << k) < x) ++k;
  return k;
}

}  // namespace

Graph lexicographic_product(const Graph& g, const Graph& h) {
  return build_product(g, h, [&](int g1, int h1, int g2, int h2) {
    return (g.open_mask(g1) & bit(g2)) != 0 || (g1 == g2 && (h.open_mask(h1) & bit(h2)) != 0);
  });
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  return build_product(g, h, [&](int g1, int h1, int g2, int h2) {
    return (h1 == h2 && (g.open_mask(g1) & bit(g2)) != 0) || (g1 == g2 && (h.open_mask(h1) & bit(h2)) != 0);
  });
}

Graph complement(const Graph& g) {
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    rows[static_cast<std::size_t>(v)] = ~g.closed_mask(v) & g.vertex_mask();
  }
  return Graph::from_adjacency(std::move(rows));
}

int hat_pendants_per_support(int n) { return ceil_log2(n + 1) + 1; }

Graph hat_construction(const Graph& g) {
  const int n = g.order();
  if (n < 3) throw InvalidArgument("hat construction needs n(G) >= 3");
  if (!g.is_connected()) throw InvalidArgument("hat construction needs a connected graph");
  const int pendants = hat_pendants_per_support(n);
  const long long order = static_cast<long long>(n + 1) * (1 + pendants);
  if (order > kMaxVertices) {
    throw InvalidArgument("hat construction order " + std::to_string(order) + " exceeds the " +
                          std::to_string(kMaxVertices) + "-vertex cap");
  }
  std::vector<Edge> edges = g.edges();
  const int w = n;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, w);
  int next = n + 1;
  for (int support = 0; support <= n; ++support) {
    for (int p = 0; p < pendants; ++p) edges.emplace_back(support, next++);
  }
  return Graph::from_edges(static_cast<int>(order), edges);
}

Graph bridge_graph(int m, int n) {
  if (m < 3 || n < 3) throw InvalidArgument("bridge graph needs m, n >= 3");
  if (m + n > kMaxVertices) throw InvalidArgument("bridge graph exceeds the vertex cap");
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) edges.emplace_back(i, j);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(m + i, m + j);
  edges.emplace_back(0, m);
  edges.emplace_back(1, m + 1);
  return Graph::from_edges(m + n, edges);
}

}  // namespace domgame
