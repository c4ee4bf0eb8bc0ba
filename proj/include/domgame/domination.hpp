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

enum class DominationKind { dominating, total_dominating };

struct DominationCertificate {
  DominationKind kind = DominationKind::dominating;
  VertexSet set;
  int size = 0;

  /// N[set] = V (dominating) or N(set) = V (total).
  bool validates(const Graph& g) const;
};

struct DominationResult {
  int value = 0;
  DominationCertificate certificate;
};

/// γ(G) with a witness. Among optimal sets the one with the numerically
/// smallest encoding is returned.
DominationResult domination_number(const Graph& g);

/// γ_t(G) with a witness, same tie-break. Throws IsolatedVertexError.
DominationResult total_domination_number(const Graph& g);

/// Value-only variants; skip the tie-break refinement.
int gamma(const Graph& g);
int gamma_t(const Graph& g);

/// Vertices with at least one degree-1 neighbor.
VertexSet support_vertices(const Graph& g);

/// Pendant (degree-1) neighbors of v.
VertexSet pendant_neighbors(const Graph& g, int v);

/// True iff Supp(G) dominates G.
bool has_supportive_dominating_set(const Graph& g);

/// Supp(G) dominates G and every support vertex carries at least
/// ceil(log2 γ(G)) + 1 pendants. Requires G connected with n >= 3.
bool satisfies_pendant_theorem_hypothesis(const Graph& g);

}  // namespace domgame
