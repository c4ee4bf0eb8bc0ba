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

#include "domgame/verifier.hpp"

#include <json.hpp>

#include <atomic>
#include <fstream>
#include <thread>

#include "domgame/closed_forms.hpp"
#include "domgame/constructions.hpp"
#include "domgame/domination.hpp"
#include "domgame/errors.hpp"
#include "domgame/graph_catalog.hpp"
#include "domgame/graph_io.hpp"
#include "domgame/structure.hpp"
#include "domgame/tree_census.hpp"

namespace domgame {

std::string_view status_name(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::vacuous: return "vacuous";
    case CheckStatus::fail: return "fail";
  }
  return "fail";
}

std::string CheckReport::to_json() const {
  nlohmann::ordered_json j;
  j["claim"] = claim;
  j["graph"] = graph6;
  j["status"] = status_name(status);
  for (const auto& [key, value] : values) j[key] = value;
  if (!note.empty()) j["note"] = note;
  return j.dump();
}

namespace {

const char* value_key(Variant v, Player first) {
  static constexpr const char* keys[5][2] = {
      {"dom_d", "dom_s"}, {"total_d", "total_s"}, {"z_d", "z_s"}, {"l_d", "l_s"}, {"ll_d", "ll_s"}};
  return keys[static_cast<int>(v)][static_cast<int>(first)];
}

CheckReport make_report(std::string claim, const Graph& g) {
  CheckReport r;
  r.claim = std::move(claim);
  r.graph6 = to_graph6(g);
  return r;
}

CheckStatus verdict(bool holds) { return holds ? CheckStatus::pass : CheckStatus::fail; }

}  // namespace

// ---------------------------------------------------------------------------

Workbench::Workbench(SolverOptions options) : options_(options) {}

std::vector<std::string> hierarchy_violations(const InvariantProfile& p) {
  std::vector<std::string> out;
  for (Player first : {Player::dominator, Player::staller}) {
    const char* tag = first == Player::dominator ? "D" : "S";
    const int z = p.value(Variant::z, first);
    const int dom = p.value(Variant::dom, first);
    const int total = p.value(Variant::total, first);
    const int l = p.value(Variant::l, first);
    const int ll = p.value(Variant::ll, first);
    auto need = [&](bool holds, const char* relation) {
      if (!holds) out.push_back(std::string(relation) + " (" + tag + "-game)");
    };
    need(z <= dom, "z <= dom");
    need(dom <= l, "dom <= l");
    need(l <= ll, "l <= ll");
    need(z <= total, "z <= total");
    need(total <= l, "total <= l");
  }
  const int z = p.value(Variant::z, Player::dominator);
  const int total = p.value(Variant::total, Player::dominator);
  if (p.gamma > z) out.push_back("gamma <= z (D-game)");
  if (p.gamma_t > total) out.push_back("gamma_t <= total (D-game)");
  return out;
}

const InvariantProfile& Workbench::profile(const Graph& g) {
  std::string key = to_graph6(g);
  if (auto it = profiles_.find(key); it != profiles_.end()) return it->second;
  InvariantProfile p = domgame::profile(g, options_);
  if (auto bad = hierarchy_violations(p); !bad.empty()) {
    throw ClaimViolation("game hierarchy violated on " + key + ": " + bad.front(), key);
  }
  return profiles_.emplace(std::move(key), p).first->second;
}

CheckReport check_hierarchy(Workbench& wb, const Graph& g) {
  CheckReport r = make_report("hierarchy", g);
  require_isolate_free(g);
  InvariantProfile p;
  try {
    p = wb.profile(g);
  } catch (const ClaimViolation&) {
    p = domgame::profile(g, wb.solver_options());
  }
  r.values = {{"gamma", p.gamma}, {"gamma_t", p.gamma_t}};
  for (Variant v : kAllVariants) {
    for (Player first : {Player::dominator, Player::staller}) r.values.emplace_back(value_key(v, first), p.value(v, first));
  }
  const auto bad = hierarchy_violations(p);
  r.status = verdict(bad.empty());
  if (!bad.empty()) r.note = bad.front();
  return r;
}

CheckReport check_lexicographic_total(Workbench& wb, const Graph& g, int n) {
  if (n < 2) throw InvalidArgument("lexicographic check needs n >= 2");
  if (g.min_degree() < 1) throw IsolatedVertexError("lexicographic total check needs delta(G) >= 1");
  CheckReport r = make_report("lex_total_game", g);
  const Graph product = lexicographic_product(g, complement(complete(n)));
  const int lhs = wb.value(g, Variant::total, Player::dominator);
  const int rhs = wb.value(product, Variant::z, Player::dominator);
  r.values = {{"n", n}, {"total_d", lhs}, {"product_z_d", rhs}};
  r.status = verdict(lhs == rhs);
  return r;
}

CheckReport check_lexicographic_complete(Workbench& wb, const Graph& g, int n) {
  if (n < 2) throw InvalidArgument("lexicographic check needs n >= 2");
  CheckReport r = make_report("lex_dom_game", g);
  const Graph product = lexicographic_product(g, complete(n));
  const int lhs = wb.value(g, Variant::dom, Player::dominator);
  const int rhs = wb.value(product, Variant::z, Player::dominator);
  r.values = {{"n", n}, {"dom_d", lhs}, {"product_z_d", rhs}};
  r.status = verdict(lhs == rhs);
  return r;
}

CheckReport check_even_Z_theorem(Workbench& wb, const Graph& g) {
  CheckReport r = make_report("even_z_below_l", g);
  const int z = wb.value(g, Variant::z, Player::dominator);
  const int l = wb.value(g, Variant::l, Player::dominator);
  r.values = {{"z_d", z}, {"l_d", l}};
  r.status = z % 2 != 0 ? CheckStatus::vacuous : verdict(z + 1 <= l);
  return r;
}

CheckReport check_Z_insensitive_equality(Workbench& wb, const Graph& g) {
  CheckReport r = make_report("z_insensitive_equality", g);
  if (auto witness = find_Z_sensitivity(g)) {
    r.status = CheckStatus::vacuous;
    r.note = "Z-configuration at " + std::to_string(witness->vertex) + " for D=" + witness->played.to_string();
    return r;
  }
  const int z_d = wb.value(g, Variant::z, Player::dominator);
  const int dom_d = wb.value(g, Variant::dom, Player::dominator);
  const int z_s = wb.value(g, Variant::z, Player::staller);
  const int dom_s = wb.value(g, Variant::dom, Player::staller);
  r.values = {{"z_d", z_d}, {"dom_d", dom_d}, {"z_s", z_s}, {"dom_s", dom_s}};
  r.status = verdict(z_d == dom_d && z_s == dom_s);
  return r;
}

CheckReport check_claw_implications(const Graph& g) {
  CheckReport r = make_report("claw_implications", g);
  const bool claw_free = is_claw_free(g);
  const bool weakly = is_weakly_claw_free(g);
  const bool insensitive = g.is_isolate_free() && is_Z_insensitive(g);
  r.values = {{"claw_free", claw_free}, {"weakly_claw_free", weakly}, {"z_insensitive", insensitive}};
  if (!claw_free && !weakly) {
    r.status = CheckStatus::vacuous;
  } else {
    r.status = verdict((!claw_free || weakly || !g.is_isolate_free()) && (!weakly || insensitive));
  }
  return r;
}

CheckReport check_twin_lemmas(Workbench& wb, const Graph& g) {
  CheckReport r = make_report("twin_lemmas", g);
  const auto true_pairs = find_twins(g, TwinKind::true_twins);
  const auto false_pairs = find_twins(g, TwinKind::false_twins);
  r.values = {{"true_pairs", static_cast<long long>(true_pairs.size())},
              {"false_pairs", static_cast<long long>(false_pairs.size())}};
  if (true_pairs.empty() && false_pairs.empty()) {
    r.status = CheckStatus::vacuous;
    return r;
  }
  bool holds = true;
  const int dom = wb.value(g, Variant::dom, Player::dominator);
  for (auto [u, v] : true_pairs) {
    const Graph smaller = g.remove_vertex(v);
    if (!smaller.is_isolate_free()) continue;  // only K_2 collapses to K_1
    if (wb.value(smaller, Variant::dom, Player::dominator) != dom) {
      holds = false;
      r.note = "true twins " + std::to_string(u) + "," + std::to_string(v) + " change dom_d";
      break;
    }
  }
  const int total = wb.value(g, Variant::total, Player::dominator);
  for (auto [u, v] : false_pairs) {
    if (!holds) break;
    const Graph smaller = g.remove_vertex(v);
    if (wb.value(smaller, Variant::total, Player::dominator) != total) {
      holds = false;
      r.note = "false twins " + std::to_string(u) + "," + std::to_string(v) + " change total_d";
    }
  }
  r.values.emplace_back("dom_d", dom);
  r.values.emplace_back("total_d", total);
  r.status = verdict(holds);
  return r;
}

CheckReport check_pendant_theorem(Workbench& wb, const Graph& g) {
  CheckReport r = make_report("pendant_theorem", g);
  if (!satisfies_pendant_theorem_hypothesis(g)) {
    r.status = CheckStatus::vacuous;
    return r;
  }
  const int gam = gamma(g);
  const int dom = wb.value(g, Variant::dom, Player::dominator);
  r.values = {{"gamma", gam}, {"dom_d", dom}};
  r.status = verdict(dom == 2 * gam - 1);
  return r;
}

CheckReport check_classic_bounds(Workbench& wb, const Graph& g) {
  CheckReport r = make_report("classic_bounds", g);
  const auto dom_set = domination_number(g);
  const auto total_set = total_domination_number(g);
  const InvariantProfile& p = wb.profile(g);
  bool holds = dom_set.value == p.gamma && total_set.value == p.gamma_t && dom_set.certificate.validates(g) &&
               total_set.certificate.validates(g) && p.gamma <= p.gamma_t && p.gamma_t <= 2 * p.gamma;
  const int dom_d = p.value(Variant::dom, Player::dominator);
  holds = holds && dom_d <= 2 * p.gamma - 1 && dom_d + 1 <= 2 * p.gamma && p.gamma <= p.value(Variant::z, Player::dominator);
  for (Variant v : {Variant::total, Variant::l, Variant::ll}) {
    const int value = p.value(v, Player::dominator);
    holds = holds && p.gamma_t <= value && value <= 2 * p.gamma_t - 1;
  }
  // K_2 is the lone connected exception: both ends are support vertices.
  if (g.order() >= 3 && g.is_connected() && has_supportive_dominating_set(g)) holds = holds && support_vertices(g).size() == p.gamma;
  r.values = {{"gamma", p.gamma}, {"gamma_t", p.gamma_t}, {"dom_d", dom_d}};
  r.status = verdict(holds);
  return r;
}

CheckReport check_path_formula(Workbench& wb, int n) {
  const Graph g = path(n);
  CheckReport r = make_report("path_formula", g);
  const int solver = wb.value(g, Variant::z, Player::dominator);
  const int formula = closed_forms::gamma_Zg_path(n);
  r.values = {{"n", n}, {"z_d", solver}, {"formula", formula}};
  r.status = verdict(solver == formula);
  return r;
}

CheckReport check_cycle_power_formula(Workbench& wb, int big_n, int n) {
  const Graph g = cycle_power(big_n, n);
  CheckReport r = make_report("cycle_power_formula", g);
  const int solver = wb.value(g, Variant::z, Player::dominator);
  const int formula = closed_forms::gamma_Zg_cycle_power(big_n, n);
  r.values = {{"N", big_n}, {"n", n}, {"z_d", solver}, {"formula", formula}};
  r.status = verdict(solver == formula);
  return r;
}

std::vector<CheckReport> check_spot_values(Workbench& wb) {
  std::vector<CheckReport> out;
  {
    const Graph g = path(6);
    CheckReport r = make_report("spot_values", g);
    const int gt = gamma_t(g);
    const int dom = wb.value(g, Variant::dom, Player::dominator);
    const int z = wb.value(g, Variant::z, Player::dominator);
    r.values = {{"gamma_t", gt}, {"dom_d", dom}, {"z_d", z}};
    r.status = verdict(gt == 4 && dom == 3 && z == 3);
    out.push_back(std::move(r));
  }
  {
    const Graph g = cartesian_product(path(2), path(3));
    CheckReport r = make_report("spot_values", g);
    const int gt = gamma_t(g);
    const int dom = wb.value(g, Variant::dom, Player::dominator);
    const int z = wb.value(g, Variant::z, Player::dominator);
    r.values = {{"gamma_t", gt}, {"dom_d", dom}, {"z_d", z}};
    r.status = verdict(gt == 2 && dom == 3 && z == 3);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CheckReport> check_hamming_and_bridge_and_hat(Workbench& wb) {
  std::vector<CheckReport> out;
  auto three_games = [&](const Graph& g, const char* claim, int expected, std::vector<std::pair<std::string, long long>> params) {
    CheckReport r = make_report(claim, g);
    const int zv = wb.value(g, Variant::z, Player::dominator);
    const int lv = wb.value(g, Variant::l, Player::dominator);
    const int llv = wb.value(g, Variant::ll, Player::dominator);
    r.values = std::move(params);
    r.values.insert(r.values.end(), {{"z_d", zv}, {"l_d", lv}, {"ll_d", llv}, {"formula", expected}});
    r.status = verdict(zv == expected && lv == expected && llv == expected);
    out.push_back(std::move(r));
  };
  for (int m = 2; m <= 3; ++m) {
    for (int n = 2 * m - 1; n <= 2 * m; ++n) {
      three_games(cartesian_product(complete(m), complete(n)), "hamming_values", closed_forms::game_values_hamming(m, n),
                  {{"m", m}, {"n", n}});
    }
  }
  // K_2 □ K_5 completes the m = 2 instances.
  three_games(cartesian_product(complete(2), complete(5)), "hamming_values", closed_forms::game_values_hamming(2, 5),
              {{"m", 2}, {"n", 5}});
  for (int m = 3; m <= 5; ++m) {
    for (int n = 3; n <= 5; ++n) {
      three_games(bridge_graph(m, n), "bridge_values", closed_forms::game_values_bridge(m, n), {{"m", m}, {"n", n}});
    }
  }
  for (const Graph& base : {path(3), complete(3)}) {
    const Graph hat = hat_construction(base);
    CheckReport r = make_report("hat_values", hat);
    const auto expected = closed_forms::hat_values(base.order());
    const int gz = wb.value(hat, Variant::z, Player::dominator);
    const int gam = wb.profile(hat).gamma;
    const int gg = wb.value(hat, Variant::dom, Player::dominator);
    r.values = {{"base_order", base.order()}, {"z_d", gz}, {"gamma", gam}, {"dom_d", gg}};
    r.note = "base " + to_graph6(base);
    r.status = verdict(closed_forms::HatValues{gz, gam, gg} == expected);
    out.push_back(std::move(r));
  }
  return out;
}

CheckReport check_hierarchy(const Graph& g) {
  Workbench wb;
  return check_hierarchy(wb, g);
}
CheckReport check_lexicographic_total(const Graph& g, int n) {
  Workbench wb;
  return check_lexicographic_total(wb, g, n);
}
CheckReport check_lexicographic_complete(const Graph& g, int n) {
  Workbench wb;
  return check_lexicographic_complete(wb, g, n);
}
CheckReport check_even_Z_theorem(const Graph& g) {
  Workbench wb;
  return check_even_Z_theorem(wb, g);
}
CheckReport check_Z_insensitive_equality(const Graph& g) {
  Workbench wb;
  return check_Z_insensitive_equality(wb, g);
}
CheckReport check_twin_lemmas(const Graph& g) {
  Workbench wb;
  return check_twin_lemmas(wb, g);
}
CheckReport check_pendant_theorem(const Graph& g) {
  Workbench wb;
  return check_pendant_theorem(wb, g);
}
std::vector<CheckReport> check_hamming_and_bridge_and_hat() {
  Workbench wb;
  return check_hamming_and_bridge_and_hat(wb);
}

// ---------------------------------------------------------------------------
// Suites

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"spotvalues", "structure", "products", "theorems", "all"};
  return names;
}

std::size_t SuiteResult::count(CheckStatus s) const {
  std::size_t c = 0;
  for (const auto& r : reports) c += r.status == s;
  return c;
}

namespace {

using Task = std::function<std::vector<CheckReport>(Workbench&)>;

void single(std::vector<Task>& tasks, std::function<CheckReport(Workbench&)> check) {
  tasks.push_back([check = std::move(check)](Workbench& wb) { return std::vector<CheckReport>{check(wb)}; });
}

void add_spotvalues(std::vector<Task>& tasks) {
  tasks.push_back([](Workbench& wb) { return check_spot_values(wb); });
  for (int n = 2; n <= 20; ++n) single(tasks, [n](Workbench& wb) { return check_path_formula(wb, n); });
  for (int big_n = 3; big_n <= 14; ++big_n) {
    for (int n = 1; n <= 3; ++n) {
      single(tasks, [big_n, n](Workbench& wb) { return check_cycle_power_formula(wb, big_n, n); });
    }
  }
  tasks.push_back([](Workbench& wb) { return check_hamming_and_bridge_and_hat(wb); });
}

void add_structure(std::vector<Task>& tasks, const SuiteOptions& options) {
  for (const Graph& g : connected_graphs(2, std::min(options.max_order, kMaxCatalogOrder))) {
    single(tasks, [g](Workbench&) { return check_claw_implications(g); });
    single(tasks, [g](Workbench& wb) { return check_Z_insensitive_equality(wb, g); });
    single(tasks, [g](Workbench& wb) { return check_twin_lemmas(wb, g); });
  }
}

void add_products(std::vector<Task>& tasks, const SuiteOptions& options) {
  for (const Graph& g : connected_graphs(2, std::min(options.max_order, 5))) {
    for (int n : {2, 3}) {
      single(tasks, [g, n](Workbench& wb) { return check_lexicographic_total(wb, g, n); });
      single(tasks, [g, n](Workbench& wb) { return check_lexicographic_complete(wb, g, n); });
    }
  }
}

void add_theorems(std::vector<Task>& tasks, const SuiteOptions& options) {
  for (const Graph& g : connected_graphs(2, std::min(options.max_order, kMaxCatalogOrder))) {
    single(tasks, [g](Workbench& wb) { return check_hierarchy(wb, g); });
    single(tasks, [g](Workbench& wb) { return check_classic_bounds(wb, g); });
    single(tasks, [g](Workbench& wb) { return check_even_Z_theorem(wb, g); });
    if (g.order() >= 3) single(tasks, [g](Workbench& wb) { return check_pendant_theorem(wb, g); });
  }
  for (int n = 2; n <= options.max_tree_order; ++n) {
    tasks.push_back([n](Workbench& wb) {
      std::vector<CheckReport> out;
      for (const Graph& t : free_trees(n)) out.push_back(check_even_Z_theorem(wb, t));
      return out;
    });
  }
  for (const Graph& base : {path(3), complete(3)}) {
    single(tasks, [base](Workbench& wb) { return check_pendant_theorem(wb, hat_construction(base)); });
  }
}

CheckReport violation_report(const ClaimViolation& e) {
  CheckReport r;
  r.claim = "hierarchy";
  r.graph6 = e.graph6();
  r.status = CheckStatus::fail;
  r.note = e.what();
  return r;
}

std::vector<CheckReport> run_task(const Task& task, Workbench& wb) {
  try {
    return task(wb);
  } catch (const ClaimViolation& e) {
    return {violation_report(e)};
  }
}

}  // namespace

SuiteResult run_suite(std::string_view name, const SuiteOptions& options) {
  std::vector<Task> tasks;
  const bool all = name == "all";
  if (name == "spotvalues" || all) add_spotvalues(tasks);
  if (name == "structure" || all) add_structure(tasks, options);
  if (name == "products" || all) add_products(tasks, options);
  if (name == "theorems" || all) add_theorems(tasks, options);
  if (tasks.empty()) throw InvalidArgument("unknown verification suite '" + std::string(name) + "'");

  SuiteResult result;
  auto emit = [&](CheckReport r) {
    if (options.sink) options.sink(r);
    const bool failed = r.failed();
    if (failed && !result.failed) {
      result.failed = true;
      std::ofstream out(options.counterexample_path, std::ios::trunc);
      out << r.graph6 << '\n';
    }
    result.reports.push_back(std::move(r));
    return failed;
  };

  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    Workbench wb(options.solver);
    for (const Task& task : tasks) {
      bool stop = false;
      for (CheckReport& r : run_task(task, wb)) {
        if (emit(std::move(r))) {
          stop = true;
          break;
        }
      }
      if (stop) break;
    }
    result.graphs_touched = wb.graphs_touched();
    return result;
  }

  std::vector<std::vector<CheckReport>> slots(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> abort{false};
  std::atomic<std::size_t> touched{0};
  {
    std::vector<std::jthread> pool;
    for (int w = 0; w < jobs; ++w) {
      pool.emplace_back([&] {
        Workbench wb(options.solver);
        for (std::size_t i = next++; i < tasks.size() && !abort; i = next++) {
          slots[i] = run_task(tasks[i], wb);
          for (const auto& r : slots[i]) {
            if (r.failed()) abort = true;
          }
        }
        touched += wb.graphs_touched();
      });
    }
  }
  for (auto& slot : slots) {
    bool stop = false;
    for (CheckReport& r : slot) {
      if (emit(std::move(r))) {
        stop = true;
        break;
      }
    }
    if (stop) break;
  }
  result.graphs_touched = touched;
  return result;
}

}  // namespace domgame
