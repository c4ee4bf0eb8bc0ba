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

#include "domgame/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "domgame/errors.hpp"

namespace domgame {

namespace {

constexpr int kGraph6Bias = 63;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int graph6_byte(char c) {
  const int value = static_cast<unsigned char>(c) - kGraph6Bias;
  if (value < 0 || value > 63) {
    throw ParseError(std::string("invalid graph6 byte '") + c + "'");
  }
  return value;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw ParseError("empty graph6 string");

  std::size_t pos = 0;
  int n = 0;
  if (text[0] != '~') {
    n = graph6_byte(text[0]);
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~') throw ParseError("graph6 order exceeds the vertex cap");
    if (text.size() < 4) throw ParseError("truncated graph6 header");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | graph6_byte(text[i]);
    pos = 4;
  }
  if (n > kMaxVertices) {
    throw ParseError("graph6 order " + std::to_string(n) + " exceeds the " + std::to_string(kMaxVertices) +
                     "-vertex cap");
  }

  const std::size_t pairs = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - (n > 0)) / 2;
  const std::size_t body = (pairs + 5) / 6;
  if (text.size() - pos != body) {
    throw ParseError("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                     std::to_string(body));
  }

  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = graph6_byte(text[pos + k / 6]);
      if ((chunk >> (5 - static_cast<int>(k % 6))) & 1) {
        rows[static_cast<std::size_t>(i)] |= bit(j);
        rows[static_cast<std::size_t>(j)] |= bit(i);
      }
    }
  }
  // Padding bits must be zero for the encoding to be canonical.
  if (pairs % 6 != 0) {
    const int last = graph6_byte(text.back());
    if ((last & ((1 << (6 - pairs % 6)) - 1)) != 0) throw ParseError("graph6 padding bits are not zero");
  }
  return Graph::from_adjacency(std::move(rows));
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kGraph6Bias));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kGraph6Bias));
  }
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | ((g.open_mask(i) >> j) & 1 ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kGraph6Bias));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kGraph6Bias));
  return out;
}

Graph parse_edgelist(std::string_view text) {
  std::vector<long long> numbers;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    long long value = 0;
    auto [end, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc() || end == text.data() + i) {
      throw ParseError(std::string("unexpected character '") + c + "' in edge list");
    }
    numbers.push_back(value);
    i = static_cast<std::size_t>(end - text.data());
  }
  if (numbers.size() < 2) throw ParseError("edge list header must be \"n m\"");
  const long long n = numbers[0];
  const long long m = numbers[1];
  if (n < 0 || m < 0) throw ParseError("edge list header has a negative count");
  if (n > kMaxVertices) {
    throw ParseError("edge list order " + std::to_string(n) + " exceeds the " + std::to_string(kMaxVertices) +
                     "-vertex cap");
  }
  if (numbers.size() != 2 + 2 * static_cast<std::size_t>(m)) {
    throw ParseError("edge list declares " + std::to_string(m) + " edges but has " +
                     std::to_string(numbers.size() - 2) + " endpoint values");
  }
  std::vector<Edge> edges;
  for (long long e = 0; e < m; ++e) {
    const long long u = numbers[static_cast<std::size_t>(2 + 2 * e)];
    const long long v = numbers[static_cast<std::size_t>(3 + 2 * e)];
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError("edge " + std::to_string(u) + " " + std::to_string(v) + ": vertex index out of range");
    }
    if (u == v) throw ParseError("edge list contains a loop at vertex " + std::to_string(u));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string to_edgelist(const Graph& g) {
  const auto edges = g.edges();
  std::ostringstream out;
  out << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

GraphFormat detect_format(std::string_view text) {
  text = trim(text);
  if (!text.empty() && std::isdigit(static_cast<unsigned char>(text.front()))) return GraphFormat::edgelist;
  return GraphFormat::graph6;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::graph6 ? parse_graph6(text) : parse_edgelist(text);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::graph6 ? to_graph6(g) : to_edgelist(g);
}

Graph load_graph(const std::string& source) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(source, ec)) {
    std::ifstream in(source, std::ios::binary);
    if (!in) throw ParseError("cannot read graph file '" + source + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    return parse_graph(text, detect_format(text));
  }
  return parse_graph(source, detect_format(source));
}

}  // namespace domgame
