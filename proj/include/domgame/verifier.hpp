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
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "domgame/game.hpp"
#include "domgame/graph.hpp"

namespace domgame {

enum class CheckStatus { pass, vacuous, fail };
std::string_view status_name(CheckStatus s) noexcept;

/// Outcome of checking one claim on one graph.
struct CheckReport {
  std::string claim;
  std::string graph6;
  CheckStatus status = CheckStatus::pass;
  std::vector<std::pair<std::string, long long>> values;
  std::string note;

  bool failed() const noexcept { return status == CheckStatus::fail; }
  /// One flat JSON object, keys in insertion order.
  std::string to_json() const;
};

/// Caches invariant profiles by graph6 and checks the full game hierarchy
/// (both chains, D- and S-game, plus γ and γ_t bounds) on every profile it
/// computes. A violation throws ClaimViolation, so no suite can touch a
/// graph without the hierarchy being enforced.
class Workbench {
 public:
  explicit Workbench(SolverOptions options = {});

  const InvariantProfile& profile(const Graph& g);
  int value(const Graph& g, Variant v, Player first) { return profile(g).value(v, first); }

  std::size_t graphs_touched() const noexcept { return profiles_.size(); }
  const SolverOptions& solver_options() const noexcept { return options_; }

 private:
  SolverOptions options_;
  std::map<std::string, InvariantProfile> profiles_;
};

/// Hierarchy relations that fail on `p`, empty when all hold.
std::vector<std::string> hierarchy_violations(const InvariantProfile& p);

CheckReport check_hierarchy(Workbench& wb, const Graph& g);
/// γ_tg(G) = γ_Zg(G ∘ K̄_n).
CheckReport check_lexicographic_total(Workbench& wb, const Graph& g, int n);
/// γ_g(G) = γ_Zg(G ∘ K_n).
CheckReport check_lexicographic_complete(Workbench& wb, const Graph& g, int n);
/// γ_Zg even ⟹ γ_Zg + 1 <= γ_Lg.
CheckReport check_even_Z_theorem(Workbench& wb, const Graph& g);
/// Z-insensitive ⟹ γ_Zg = γ_g and γ'_Zg = γ'_g.
CheckReport check_Z_insensitive_equality(Workbench& wb, const Graph& g);
/// claw-free ⟹ weakly claw-free ⟹ Z-insensitive.
CheckReport check_claw_implications(const Graph& g);
/// Deleting one of a true-twin pair keeps γ_g; one of a false-twin pair keeps γ_tg.
CheckReport check_twin_lemmas(Workbench& wb, const Graph& g);
/// Pendant-theorem hypothesis ⟹ γ_g = 2γ - 1.
CheckReport check_pendant_theorem(Workbench& wb, const Graph& g);
/// γ(G) <= γ_t(G) <= 2γ(G), and |Supp(G)| = γ(G) for supportive dominating sets.
CheckReport check_classic_bounds(Workbench& wb, const Graph& g);

CheckReport check_path_formula(Workbench& wb, int n);
CheckReport check_cycle_power_formula(Workbench& wb, int big_n, int n);
std::vector<CheckReport> check_spot_values(Workbench& wb);
std::vector<CheckReport> check_hamming_and_bridge_and_hat(Workbench& wb);

CheckReport check_hierarchy(const Graph& g);
CheckReport check_lexicographic_total(const Graph& g, int n);
CheckReport check_lexicographic_complete(const Graph& g, int n);
CheckReport check_even_Z_theorem(const Graph& g);
CheckReport check_Z_insensitive_equality(const Graph& g);
CheckReport check_twin_lemmas(const Graph& g);
CheckReport check_pendant_theorem(const Graph& g);
std::vector<CheckReport> check_hamming_and_bridge_and_hat();

/// Suite names in manifest order.
const std::vector<std::string>& suite_names();

struct SuiteOptions {
  int max_order = 7;
  /// Largest tree order for the tree sweeps in the theorems suite.
  int max_tree_order = 12;
  int jobs = 1;
  SolverOptions solver;
  /// Where the graph6 of a failing check is written.
  std::filesystem::path counterexample_path = "counterexample.g6";
  /// Called with each report as soon as it is produced.
  std::function<void(const CheckReport&)> sink;
};

struct SuiteResult {
  std::vector<CheckReport> reports;
  bool failed = false;
  std::size_t graphs_touched = 0;

  std::size_t count(CheckStatus s) const;
};

/// Runs a named suite (structure, products, theorems, spotvalues, all).
/// Stops at the first failing check and writes its graph to
/// options.counterexample_path.
SuiteResult run_suite(std::string_view name, const SuiteOptions& options = {});

}  // namespace domgame
