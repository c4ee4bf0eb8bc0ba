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

// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include "domgame/closed_forms.hpp"
#include "domgame/constructions.hpp"
#include "domgame/domination.hpp"
#include "domgame/errors.hpp"
#include "domgame/graph_catalog.hpp"
#include "domgame/graph_io.hpp"
#include "domgame/structure.hpp"
#include "domgame/tree_census.hpp"
#include "domgame/verifier.hpp"
#include "support/brute_force.hpp"

using namespace domgame;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, double budget_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = body();
  } catch (const std::exception& e) {
    outcome = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = seconds <= budget_seconds;
  const bool ok = outcome.ok && in_time;
  if (!ok) ++failures;
  std::printf("[%s] %2d %-44s %8.2fs (budget %.0fs)%s%s\n", ok ? "PASS" : "FAIL", id, title.c_str(), seconds,
              budget_seconds, outcome.detail.empty() ? "" : "  ", outcome.detail.c_str());
  if (!in_time) std::printf("       over the time budget\n");
  std::fflush(stdout);
}

Outcome mismatch(std::ostringstream& msg) { return {false, msg.str()}; }

oracle::Game oracle_game(Variant v) {
  switch (v) {
    case Variant::dom: return oracle::Game::dom;
    case Variant::total: return oracle::Game::total;
    case Variant::z: return oracle::Game::z;
    case Variant::l: return oracle::Game::l;
    case Variant::ll: return oracle::Game::ll;
  }
  return oracle::Game::dom;
}

int workers() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

}  // namespace

int main() {
  std::printf("acceptance run with %d worker thread(s)\n", workers());
  Workbench bench;

  criterion(1, "path formula, n = 2..20", 10, [&] {
    for (int n = 2; n <= 20; ++n) {
      const int got = game_value(path(n), Variant::z, Player::dominator);
      if (got != closed_forms::gamma_Zg_path(n)) {
        std::ostringstream msg;
        msg << "P_" << n << ": solver " << got << " formula " << closed_forms::gamma_Zg_path(n);
        return mismatch(msg);
      }
    }
    return Outcome{};
  });

  criterion(2, "cycle powers, N = 3..14, n = 1..3", 60, [&] {
    for (int big_n = 3; big_n <= 14; ++big_n) {
      for (int n = 1; n <= 3; ++n) {
        const int got = game_value(cycle_power(big_n, n), Variant::z, Player::dominator);
        const int want = closed_forms::gamma_Zg_cycle_power(big_n, n);
        if (got != want) {
          std::ostringstream msg;
          msg << "C_" << big_n << "^" << n << ": solver " << got << " formula " << want;
          return mismatch(msg);
        }
      }
    }
    return Outcome{};
  });

  const std::vector<CensusRow> table = {
      {4, 2, 2, 0, 2, 0, 1},
      {5, 3, 3, 1, 2, 0, 1},
      {6, 6, 5, 1, 4, 0, 2},
      {7, 11, 10, 3, 6, 0, 3},
      {8, 23, 19, 3, 11, 0, 6},
      {9, 47, 40, 7, 16, 1, 8},
      {10, 106, 84, 11, 29, 5, 21},
      {11, 235, 186, 21, 47, 20, 41},
      {12, 551, 412, 38, 84, 60, 103},
      {13, 1301, 974, 75, 137, 189, 224},
      {14, 3159, 2277, 141, 237, 559, 563},
      {15, 7741, 5456, 277, 387, 1624, 1328},
      {16, 19320, 13095, 539, 647, 4571, 3336},
  };
  auto census_rows = [&](int lo, int hi, int jobs) {
    CensusOptions opts;
    opts.jobs = jobs;
    for (const CensusRow& want : table) {
      if (want.n < lo || want.n > hi) continue;
      const CensusRow got = census_row(want.n, opts);
      if (!(got == want)) {
        std::ostringstream msg;
        msg << "row " << want.n << ": got " << census_tsv_line(got);
        return mismatch(msg);
      }
    }
    return Outcome{};
  };
  criterion(3, "tree census rows 4..12 (one worker)", 300, [&] { return census_rows(4, 12, 1); });
  criterion(3, "tree census rows 13..16 (all workers)", 3600, [&] { return census_rows(13, 16, workers()); });

  criterion(4, "spot values on P_6 and P_2 x P_3", 1, [&] {
    const Graph p6 = path(6);
    const Graph grid = cartesian_product(path(2), path(3));
    const bool ok = gamma_t(p6) == 4 && game_value(p6, Variant::dom, Player::dominator) == 3 &&
                    game_value(p6, Variant::z, Player::dominator) == 3 && gamma_t(grid) == 2 &&
                    game_value(grid, Variant::dom, Player::dominator) == 3 &&
                    game_value(grid, Variant::z, Player::dominator) == 3;
    return Outcome{ok, ok ? "" : "spot value mismatch"};
  });

  const auto small_connected = connected_graphs(2, 5);
  auto product_sweep = [&](bool total) {
    std::size_t checked = 0;
    for (const Graph& g : small_connected) {
      for (int n : {2, 3}) {
        const CheckReport r = total ? check_lexicographic_total(bench, g, n) : check_lexicographic_complete(bench, g, n);
        ++checked;
        if (r.failed()) {
          std::ostringstream msg;
          msg << r.to_json();
          return mismatch(msg);
        }
      }
    }
    return Outcome{true, std::to_string(checked) + " instances"};
  };
  criterion(5, "total game vs Z-game on G o complement(K_n)", 600, [&] { return product_sweep(true); });
  criterion(6, "domination game vs Z-game on G o K_n", 600, [&] { return product_sweep(false); });

  const auto sweep = connected_graphs(2, 7);
  criterion(7, "weakly claw-free and Z-insensitive sweep", 1800, [&] {
    std::size_t insensitive = 0;
    for (const Graph& g : sweep) {
      const CheckReport claw = check_claw_implications(g);
      const CheckReport eq = check_Z_insensitive_equality(bench, g);
      insensitive += eq.status == CheckStatus::pass;
      if (claw.failed() || eq.failed()) {
        std::ostringstream msg;
        msg << (claw.failed() ? claw.to_json() : eq.to_json());
        return mismatch(msg);
      }
    }
    return Outcome{true, std::to_string(sweep.size()) + " graphs, " + std::to_string(insensitive) + " Z-insensitive"};
  });

  criterion(8, "even Z-game value theorem", 1800, [&] {
    std::size_t even = 0;
    auto check = [&](const Graph& g) {
      const CheckReport r = check_even_Z_theorem(bench, g);
      even += r.status == CheckStatus::pass;
      return !r.failed();
    };
    for (const Graph& g : sweep) {
      if (!check(g)) return Outcome{false, "violated on " + to_graph6(g)};
    }
    for (int n = 2; n <= 12; ++n) {
      for (const Graph& t : free_trees(n)) {
        if (!check(t)) return Outcome{false, "violated on " + to_graph6(t)};
      }
    }
    return Outcome{true, std::to_string(even) + " graphs with even Z-game value"};
  });

  criterion(9, "Hamming graph values", 600, [&] {
    const std::pair<int, int> cases[] = {{2, 3}, {2, 4}, {2, 5}, {3, 5}, {3, 6}};
    for (auto [m, n] : cases) {
      const Graph g = cartesian_product(complete(m), complete(n));
      const int want = closed_forms::game_values_hamming(m, n);
      for (Variant v : {Variant::z, Variant::l, Variant::ll}) {
        const int got = bench.value(g, v, Player::dominator);
        if (got != want) {
          std::ostringstream msg;
          msg << "K_" << m << " x K_" << n << " " << GameVariant::of(v).name() << ": " << got << " vs " << want;
          return mismatch(msg);
        }
      }
    }
    return Outcome{};
  });

  criterion(10, "hat construction over P_3 and K_3", 300, [&] {
    for (const Graph& base : {path(3), complete(3)}) {
      const Graph hat = hat_construction(base);
      const closed_forms::HatValues got{bench.value(hat, Variant::z, Player::dominator), gamma(hat),
                                        bench.value(hat, Variant::dom, Player::dominator)};
      if (!(got == closed_forms::hat_values(3))) {
        std::ostringstream msg;
        msg << "base " << to_graph6(base) << ": " << got.gamma_Zg << "/" << got.gamma << "/" << got.gamma_g;
        return mismatch(msg);
      }
    }
    return Outcome{};
  });

  criterion(11, "hierarchy on every graph any suite touches", 1800, [&] {
    SuiteOptions opts;
    opts.max_order = 7;
    opts.max_tree_order = 12;
    opts.jobs = workers();
    opts.counterexample_path = std::filesystem::temp_directory_path() / "domgame_acceptance_counterexample.g6";
    const SuiteResult result = run_suite("all", opts);
    if (result.failed) {
      for (const auto& r : result.reports) {
        if (r.failed()) return Outcome{false, r.to_json()};
      }
    }
    // The bench above re-profiled every graph it saw and would have thrown on a violation.
    return Outcome{true, std::to_string(result.graphs_touched + bench.graphs_touched()) + " profiles checked"};
  });

  criterion(12, "Z-game below L-game on trees up to order 14", 7200, [&] {
    CensusOptions opts;
    opts.jobs = workers();
    const ConjectureReport report = conjecture_scan(14, opts);
    if (!report.passed()) return Outcome{false, "counterexample " + report.l_counterexamples.front()};
    return Outcome{true, "0 counterexamples"};
  });

  criterion(13, "memoized solver vs brute force", 1800, [&] {
    std::vector<Graph> graphs = connected_graphs(2, 6);
    std::mt19937_64 rng(20261018);
    std::uniform_int_distribution<int> order(2, 7);
    std::uniform_real_distribution<double> density(0.15, 0.8);
    for (int i = 0; i < 200; ++i) graphs.push_back(random_isolate_free_graph(order(rng), density(rng), rng));
    std::size_t compared = 0;
    for (const Graph& g : graphs) {
      for (Variant v : kAllVariants) {
        GameSolver solver(g, v);
        oracle::BruteForceGame brute(g, oracle_game(v));
        for (Player first : {Player::dominator, Player::staller}) {
          const int fast = solver.value(first);
          const int slow = brute.value(first == Player::dominator);
          ++compared;
          if (fast != slow) {
            std::ostringstream msg;
            msg << to_graph6(g) << " " << GameVariant::of(v).name() << " " << player_name(first) << ": " << fast
                << " vs " << slow;
            return mismatch(msg);
          }
        }
      }
    }
    return Outcome{true, std::to_string(compared) + " values on " + std::to_string(graphs.size()) + " graphs"};
  });

  std::printf("%s: %d failing criteria\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
