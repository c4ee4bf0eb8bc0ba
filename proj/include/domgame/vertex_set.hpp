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

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace domgame {

/// Largest supported vertex count. Every vertex set fits one machine word.
inline constexpr int kMaxVertices = 64;

/// Mask with the low `n` bits set.
constexpr std::uint64_t low_bits(int n) noexcept {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

constexpr std::uint64_t bit(int v) noexcept { return std::uint64_t{1} << v; }

/// A subset of {0, ..., universe_size - 1}.
///
/// The word `bits()` is the canonical encoding: equal sets over the same
/// universe always have equal encodings, so it doubles as a hash key.
/// Binary operations require equal universes and throw InvalidArgument
/// otherwise.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    int operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  VertexSet() = default;
  explicit VertexSet(int universe_size);
  VertexSet(int universe_size, std::uint64_t bits);
  VertexSet(int universe_size, std::initializer_list<int> members);

  static VertexSet full(int universe_size);
  static VertexSet from_members(int universe_size, const std::vector<int>& members);

  int universe_size() const noexcept { return universe_; }
  std::uint64_t bits() const noexcept { return bits_; }

  bool contains(int v) const noexcept {
    return v >= 0 && v < universe_ && ((bits_ >> v) & 1u) != 0;
  }
  int size() const noexcept { return std::popcount(bits_); }
  bool empty() const noexcept { return bits_ == 0; }
  bool is_full() const noexcept { return bits_ == low_bits(universe_); }

  void insert(int v);
  void erase(int v);

  bool is_subset_of(const VertexSet& other) const;

  VertexSet operator|(const VertexSet& other) const;
  VertexSet operator&(const VertexSet& other) const;
  VertexSet operator-(const VertexSet& other) const;
  /// Complement within the universe.
  VertexSet complement() const noexcept { return {universe_, ~bits_ & low_bits(universe_), Trusted{}}; }

  iterator begin() const noexcept { return iterator(bits_); }
  iterator end() const noexcept { return iterator(0); }

  std::vector<int> members() const;
  /// "{0,2,5}"
  std::string to_string() const;

  bool operator==(const VertexSet&) const = default;

 private:
  struct Trusted {};
  VertexSet(int universe_size, std::uint64_t bits, Trusted) noexcept
      : universe_(universe_size), bits_(bits) {}
  void require_same_universe(const VertexSet& other) const;

  int universe_ = 0;
  std::uint64_t bits_ = 0;
};

}  // namespace domgame

template <>
struct std::hash<domgame::VertexSet> {
  std::size_t operator()(const domgame::VertexSet& s) const noexcept {
    std::uint64_t x = s.bits() ^ (std::uint64_t(s.universe_size()) << 57);
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    return static_cast<std::size_t>(x);
  }
};
