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

#include <doctest.h>

#include <bit>
#include <random>

#include "domgame/game.hpp"
#include "domgame/graph_catalog.hpp"
#include "domgame/kernels.hpp"

using namespace domgame;

namespace {

kernels::MoveScan reference_scan(const std::vector<std::uint64_t>& test, const std::vector<std::uint64_t>& gain,
                                 std::uint64_t covered, std::uint64_t excluded) {
  kernels::MoveScan out;
  for (std::size_t v = 0; v < test.size(); ++v) {
    if ((test[v] & ~covered) != 0 && !((excluded >> v) & 1u)) out.legal |= std::uint64_t{1} << v;
    out.gain[v] = static_cast<std::uint8_t>(std::popcount(gain[v] & ~covered));
  }
  return out;
}

}  // namespace

TEST_CASE("scalar kernel is always available and listed first") {
  const auto all = kernels::available_kernels();
  REQUIRE(!all.empty());
  CHECK(all.front()->isa == kernels::Isa::scalar);
  CHECK(kernels::kernels_for(kernels::Isa::scalar) != nullptr);
  MESSAGE("active kernel: " << kernels::active_kernels().name);
}

TEST_CASE("every kernel matches a plain loop on random inputs") {
  std::mt19937_64 rng(5);
  for (const auto* table : kernels::available_kernels()) {
    CAPTURE(table->name);
    for (int trial = 0; trial < 5000; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 64);
      std::vector<std::uint64_t> test(n), gain(n);
      for (int v = 0; v < n; ++v) {
        test[v] = rng() & rng();
        gain[v] = rng() & rng() & rng();
      }
      const std::uint64_t covered = rng() | rng();
      const std::uint64_t excluded = trial % 3 == 0 ? 0 : rng() & rng();
      kernels::MoveScan got;
      table->scan_moves(test.data(), gain.data(), n, covered, excluded, got);
      const auto want = reference_scan(test, gain, covered, excluded);
      REQUIRE(got.legal == want.legal);
      for (int v = 0; v < n; ++v) REQUIRE(got.gain[v] == want.gain[v]);

      const std::uint64_t selection = rng() & (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
      std::uint64_t expect_union = 0;
      for (int v = 0; v < n; ++v) {
        if ((selection >> v) & 1u) expect_union |= test[v];
      }
      REQUIRE(table->union_of(test.data(), n, selection) == expect_union);
    }
  }
}

TEST_CASE("full-degree gains at the 64-vertex boundary") {
  std::vector<std::uint64_t> masks(64, ~std::uint64_t{0});
  for (const auto* table : kernels::available_kernels()) {
    kernels::MoveScan got;
    table->scan_moves(masks.data(), masks.data(), 64, 0, 0, got);
    CHECK(got.legal == ~std::uint64_t{0});
    for (int v = 0; v < 64; ++v) CHECK(got.gain[v] == 64);
  }
}

TEST_CASE("solver values agree across kernels") {
  std::mt19937_64 rng(8);
  std::vector<Graph> graphs = connected_graphs(5);
  for (int i = 0; i < 20; ++i) graphs.push_back(random_isolate_free_graph(9 + i % 4, 0.3, rng));
  for (const Graph& g : graphs) {
    std::vector<int> reference;
    for (const auto* table : kernels::available_kernels()) {
      SolverOptions options;
      options.kernels = table;
      std::vector<int> values;
      for (Variant v : kAllVariants) {
        GameSolver solver(g, v, options);
        values.push_back(solver.value(Player::dominator));
        values.push_back(solver.value(Player::staller));
      }
      if (reference.empty()) {
        reference = values;
      } else {
        CHECK(values == reference);
      }
    }
  }
}
