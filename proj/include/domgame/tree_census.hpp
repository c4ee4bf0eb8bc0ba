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

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "domgame/game.hpp"
#include "domgame/graph.hpp"

namespace domgame {

/// Bumped whenever solver changes could alter cached census data.
inline constexpr int kCensusSolverVersion = 1;

/// Successor generator for unlabeled free trees (Wright-Richmond-Odlyzko-McKay
/// over canonical level sequences). Each tree of order n appears once, in a
/// fixed order.
class FreeTreeGenerator {
 public:
  explicit FreeTreeGenerator(int n);

  /// Level sequence of the next tree, or nullopt when exhausted.
  std::optional<std::vector<int>> next();

 private:
  int n_;
  std::optional<std::vector<int>> pending_;
  bool started_ = false;
};

/// Tree whose vertex i hangs from the last earlier vertex one level up.
Graph tree_from_level_sequence(const std::vector<int>& levels);

void for_each_free_tree(int n, const std::function<void(const Graph&)>& visit);
std::vector<Graph> free_trees(int n);

/// Per-tree values kept by the census (all D-game values).
struct TreeRecord {
  std::string graph6;
  int gamma = 0;
  int gamma_t = 0;
  int dom = 0;
  int total = 0;
  int z = 0;
  int l = 0;
  int ll = 0;

  bool operator==(const TreeRecord&) const = default;
};

struct CensusRow {
  int n = 0;
  long long total = 0;
  long long eq_dom = 0;         // γ_Zg = γ_g
  long long eq_total_game = 0;  // γ_Zg = γ_tg
  long long eq_gamma = 0;       // γ_Zg = γ
  long long gt_gamma_t = 0;     // γ_Zg > γ_t
  long long lt_gamma_t = 0;     // γ_Zg < γ_t

  bool operator==(const CensusRow&) const = default;
};

struct CensusOptions {
  int jobs = 1;
  /// Directory for resumable per-order results; empty disables caching.
  std::filesystem::path cache_dir;
  SolverOptions solver;
};

/// Values for one tree. Throws ClaimViolation if the game hierarchy
/// (γ ≤ Z ≤ DOM ≤ L ≤ LL, Z ≤ TOTAL ≤ L, γ_t ≤ TOTAL) fails.
TreeRecord evaluate_tree(const Graph& tree, SolverOptions options = {});

/// Records for every tree of order n, sorted by graph6. Result content does
/// not depend on `jobs`.
std::vector<TreeRecord> tree_records(int n, const CensusOptions& options = {});

CensusRow census_row(int n, const CensusOptions& options = {});
CensusRow row_from_records(int n, const std::vector<TreeRecord>& records);

std::string census_tsv_header();
std::string census_tsv_line(const CensusRow& row);
std::string detail_tsv_header();
std::string detail_tsv_line(const TreeRecord& record);
std::vector<TreeRecord> parse_detail_tsv(const std::string& text);

struct ConjectureOrder {
  int n = 0;
  long long trees = 0;
  long long l_violations = 0;   // trees with γ_Zg >= γ_Lg
  long long ll_violations = 0;  // trees with γ_Zg >= γ_LLg
};

struct ConjectureReport {
  std::vector<ConjectureOrder> orders;
  std::vector<std::string> l_counterexamples;   // graph6
  std::vector<std::string> ll_counterexamples;  // graph6

  bool passed() const noexcept { return l_counterexamples.empty(); }
};

/// γ_Zg(T) < γ_Lg(T) (and the weaker γ_Zg(T) < γ_LLg(T)) over all trees with
/// 2 <= n(T) <= n_max.
ConjectureReport conjecture_scan(int n_max, const CensusOptions& options = {});

}  // namespace domgame
