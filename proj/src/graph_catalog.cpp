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

#include "domgame/graph_catalog.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "domgame/errors.hpp"
#include "domgame/graph_io.hpp"

namespace domgame {

namespace {

/// Upper-triangle adjacency bits in graph6 order, first pair most significant.
std::uint64_t code_of(const Graph& g, const std::vector<int>& label_to_vertex) {
  const int n = g.order();
  std::uint64_t code = 0;
  for (int j = 1; j < n; ++j) {
    const std::uint64_t row = g.open_mask(label_to_vertex[static_cast<std::size_t>(j)]);
    for (int i = 0; i < j; ++i) {
      code = (code << 1) | ((row >> label_to_vertex[static_cast<std::size_t>(i)]) & 1u);
    }
  }
  return code;
}

/// Stable vertex colors from iterated degree refinement.
std::vector<int> refined_colors(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) color[static_cast<std::size_t>(v)] = g.degree(v);
  for (int round = 0; round < n; ++round) {
    std::vector<std::pair<int, std::vector<int>>> signature(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::vector<int> around;
      for (int u : g.open_neighborhood(v)) around.push_back(color[static_cast<std::size_t>(u)]);
      std::sort(around.begin(), around.end());
      signature[static_cast<std::size_t>(v)] = {color[static_cast<std::size_t>(v)], std::move(around)};
    }
    std::map<std::pair<int, std::vector<int>>, int> rank;
    for (const auto& s : signature) rank.emplace(s, 0);
    int next_rank = 0;
    for (auto& [key, r] : rank) r = next_rank++;
    std::vector<int> refined(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) refined[static_cast<std::size_t>(v)] = rank.at(signature[static_cast<std::size_t>(v)]);
    const bool stable = std::set<int>(refined.begin(), refined.end()).size() ==
                        std::set<int>(color.begin(), color.end()).size();
    color = std::move(refined);
    if (stable) break;
  }
  return color;
}

}  // namespace

Graph canonical_form(const Graph& g) {
  const int n = g.order();
  if (n > 11) throw InvalidArgument("canonical_form is exhaustive and limited to order 11");
  const std::vector<int> color = refined_colors(g);

  // Labels are handed out cell by cell in increasing color order.
  std::vector<int> slot_color;
  for (int v = 0; v < n; ++v) slot_color.push_back(color[static_cast<std::size_t>(v)]);
  std::sort(slot_color.begin(), slot_color.end());

  std::vector<int> labeling(static_cast<std::size_t>(n));
  std::vector<int> best_labeling;
  std::uint64_t best_code = 0;
  bool found = false;
  std::uint64_t used = 0;
  auto assign = [&](auto&& self, int slot) -> void {
    if (slot == n) {
      const std::uint64_t code = code_of(g, labeling);
      if (!found || code < best_code) {
        best_code = code;
        best_labeling = labeling;
        found = true;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if ((used >> v) & 1u || color[static_cast<std::size_t>(v)] != slot_color[static_cast<std::size_t>(slot)]) continue;
      used |= bit(v);
      labeling[static_cast<std::size_t>(slot)] = v;
      self(self, slot + 1);
      used &= ~bit(v);
    }
  };
  assign(assign, 0);

  std::vector<int> vertex_to_label(static_cast<std::size_t>(n));
  for (int label = 0; label < n; ++label) vertex_to_label[static_cast<std::size_t>(best_labeling[static_cast<std::size_t>(label)])] = label;
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(vertex_to_label[static_cast<std::size_t>(u)], vertex_to_label[static_cast<std::size_t>(v)]);
  return Graph::from_edges(n, edges);
}

std::vector<Graph> all_graphs(int n) {
  if (n < 1 || n > kMaxCatalogOrder) {
    throw InvalidArgument("graph catalog supports orders 1.." + std::to_string(kMaxCatalogOrder));
  }
  std::vector<Graph> level = {Graph(1)};
  for (int order = 2; order <= n; ++order) {
    std::map<std::string, Graph> seen;
    for (const Graph& smaller : level) {
      const int m = smaller.order();
      for (std::uint64_t attach = 0; attach < (std::uint64_t{1} << m); ++attach) {
        std::vector<std::uint64_t> rows(smaller.adjacency().begin(), smaller.adjacency().end());
        for (int v = 0; v < m; ++v) {
          if ((attach >> v) & 1u) rows[static_cast<std::size_t>(v)] |= bit(m);
        }
        rows.push_back(attach);
        Graph canon = canonical_form(Graph::from_adjacency(std::move(rows)));
        std::string key = to_graph6(canon);
        seen.emplace(std::move(key), std::move(canon));
      }
    }
    level.clear();
    for (auto& [key, graph] : seen) level.push_back(std::move(graph));
  }
  return level;
}

std::vector<Graph> connected_graphs(int n) {
  std::vector<Graph> out;
  for (Graph& g : all_graphs(n)) {
    if (g.is_connected()) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> connected_graphs(int min_order, int max_order) {
  std::vector<Graph> out;
  for (int n = min_order; n <= max_order; ++n) {
    for (Graph& g : connected_graphs(n)) out.push_back(std::move(g));
  }
  return out;
}

Graph random_isolate_free_graph(int n, double edge_probability, std::mt19937_64& rng) {
  if (n < 2) throw InvalidArgument("an isolate-free graph needs at least two vertices");
  if (n > kMaxVertices) throw InvalidArgument("random graph order exceeds the vertex cap");
  if (edge_probability <= 0.0 || edge_probability > 1.0) throw InvalidArgument("edge probability must be in (0, 1]");
  std::bernoulli_distribution coin(edge_probability);
  for (;;) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) edges.emplace_back(u, v);
    Graph g = Graph::from_edges(n, edges);
    if (g.is_isolate_free()) return g;
  }
}

}  // namespace domgame
