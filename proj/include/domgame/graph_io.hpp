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

#include <string>
#include <string_view>

#include "domgame/graph.hpp"

namespace domgame {

enum class GraphFormat { graph6, edgelist };

/// graph6 without the optional ">>graph6<<" header. Trailing newline tolerated.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// First line "n m", then m lines "u v", 0-indexed.
Graph parse_edgelist(std::string_view text);
std::string to_edgelist(const Graph& g);

Graph parse_graph(std::string_view text, GraphFormat format);
std::string serialize_graph(const Graph& g, GraphFormat format);

/// An edge list always starts with a decimal digit, which is never a valid
/// first graph6 byte.
GraphFormat detect_format(std::string_view text);

/// Reads `source` as a file if one exists at that path, else parses it as a
/// graph literal; either way the format is autodetected.
Graph load_graph(const std::string& source);

}  // namespace domgame
