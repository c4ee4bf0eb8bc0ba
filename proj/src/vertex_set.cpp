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

#include "domgame/vertex_set.hpp"

#include "domgame/errors.hpp"

namespace domgame {

namespace {

void check_universe(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw InvalidArgument("vertex universe " + std::to_string(n) + " outside [0, " +
                          std::to_string(kMaxVertices) + "]");
  }
}

void check_member(int universe, int v) {
  if (v < 0 || v >= universe) {
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range for universe of size " +
                          std::to_string(universe));
  }
}

}  // namespace

VertexSet::VertexSet(int universe_size) : universe_(universe_size) { check_universe(universe_size); }

VertexSet::VertexSet(int universe_size, std::uint64_t bits) : universe_(universe_size), bits_(bits) {
  check_universe(universe_size);
  if ((bits & ~low_bits(universe_size)) != 0) {
    throw InvalidArgument("vertex set encoding has members outside the universe");
  }
}

VertexSet::VertexSet(int universe_size, std::initializer_list<int> members) : VertexSet(universe_size) {
  for (int v : members) insert(v);
}

VertexSet VertexSet::full(int universe_size) {
  check_universe(universe_size);
  return {universe_size, low_bits(universe_size), Trusted{}};
}

VertexSet VertexSet::from_members(int universe_size, const std::vector<int>& members) {
  VertexSet s(universe_size);
  for (int v : members) s.insert(v);
  return s;
}

void VertexSet::insert(int v) {
  check_member(universe_, v);
  bits_ |= bit(v);
}

void VertexSet::erase(int v) {
  check_member(universe_, v);
  bits_ &= ~bit(v);
}

void VertexSet::require_same_universe(const VertexSet& other) const {
  if (universe_ != other.universe_) {
    throw InvalidArgument("vertex set universe mismatch (" + std::to_string(universe_) + " vs " +
                          std::to_string(other.universe_) + ")");
  }
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  require_same_universe(other);
  return (bits_ & ~other.bits_) == 0;
}

VertexSet VertexSet::operator|(const VertexSet& other) const {
  require_same_universe(other);
  return {universe_, bits_ | other.bits_, Trusted{}};
}

VertexSet VertexSet::operator&(const VertexSet& other) const {
  require_same_universe(other);
  return {universe_, bits_ & other.bits_, Trusted{}};
}

VertexSet VertexSet::operator-(const VertexSet& other) const {
  require_same_universe(other);
  return {universe_, bits_ & ~other.bits_, Trusted{}};
}

std::vector<int> VertexSet::members() const { return {begin(), end()}; }

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int v : *this) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace domgame
