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

#include "domgame/graph.hpp"

namespace domgame {

// Products index vertex (g, h) as g * n(H) + h.

/// G ∘ H: (g1,h1) ~ (g2,h2) iff g1g2 ∈ E(G), or g1 = g2 and h1h2 ∈ E(H).
Graph lexicographic_product(const Graph& g, const Graph& h);

/// G □ H: adjacent iff one coordinate is equal and the other is an edge.
Graph cartesian_product(const Graph& g, const Graph& h);

Graph complement(const Graph& g);

/// Number of pendants attached to each support vertex by hat_construction:
/// ceil(log2(n + 1)) + 1.
int hat_pendants_per_support(int n);

/// G plus a universal vertex w (index n) and hat_pendants_per_support(n)
/// pendants on each of 0..n; pendant blocks follow in support-vertex order.
/// Requires G connected with n(G) >= 3.
Graph hat_construction(const Graph& g);

/// K_m on 0..m-1 and K_n on m..m+n-1 joined by u1v1 and u2v2
/// (vertex 0 to m, vertex 1 to m+1). Requires m, n >= 3.
Graph bridge_graph(int m, int n);

}  // namespace domgame
