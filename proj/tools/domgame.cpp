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

// Command-line front end for the domination game workbench.

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "domgame/constructions.hpp"
#include "domgame/domination.hpp"
#include "domgame/errors.hpp"
#include "domgame/game.hpp"
#include "domgame/graph.hpp"
#include "domgame/graph_io.hpp"
#include "domgame/tree_census.hpp"
#include "domgame/verifier.hpp"

namespace {

using namespace domgame;

enum ExitCode : int {
  kOk = 0,
  kClaimFailed = 1,
  kUsage = 2,
  kIsolated = 3,
  kResource = 4,
  kEndOfInput = 5,
};

VertexSet parse_vertex_list(const std::string& text, int n) {
  VertexSet set(n);
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    int v = -1;
    auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc{} || end != item.data() + item.size() || v < 0 || v >= n) {
      throw ParseError("bad vertex '" + item + "' in list");
    }
    set.insert(v);
  }
  return set;
}

/// Writes to the named file, or to stdout when the name is empty.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::trunc);
      if (!file_) throw InvalidArgument("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

// ---------------------------------------------------------------------------

struct ValueArgs {
  std::string variant = "dom";
  std::string first = "d";
  std::string graph;
  std::string covered;
  std::size_t memo_cap = kDefaultMemoCap;
};

int run_value(const ValueArgs& a) {
  const Graph g = load_graph(a.graph);
  std::optional<VertexSet> covered;
  if (!a.covered.empty()) covered = parse_vertex_list(a.covered, g.order());
  SolverOptions options;
  options.max_memo_entries = a.memo_cap;
  std::cout << game_value(g, parse_variant(a.variant), parse_player(a.first), covered, options) << '\n';
  return kOk;
}

struct ProfileArgs {
  std::string graph;
  std::string format = "json";
  std::size_t memo_cap = kDefaultMemoCap;
};

int run_profile(const ProfileArgs& a) {
  const Graph g = load_graph(a.graph);
  SolverOptions options;
  options.max_memo_entries = a.memo_cap;
  const InvariantProfile p = profile(g, options);
  std::vector<std::pair<std::string, int>> fields = {{"gamma", p.gamma}, {"gamma_t", p.gamma_t}};
  for (Variant v : kAllVariants) {
    const std::string name(GameVariant::of(v).name());
    fields.emplace_back(name + "_d", p.value(v, Player::dominator));
    fields.emplace_back(name + "_s", p.value(v, Player::staller));
  }
  if (a.format == "tsv") {
    std::string header = "graph6";
    std::string row = to_graph6(g);
    for (const auto& [key, value] : fields) {
      header += '\t' + key;
      row += '\t' + std::to_string(value);
    }
    std::cout << header << '\n' << row << '\n';
  } else {
    nlohmann::ordered_json j;
    j["graph"] = to_graph6(g);
    for (const auto& [key, value] : fields) j[key] = value;
    std::cout << j.dump() << '\n';
  }
  return kOk;
}

struct GenerateArgs {
  std::string family;
  int n = -1;
  int big_n = -1;
  int k = -1;
  int m = -1;
  std::string graph;
  std::string left;
  std::string right;
  std::string format = "graph6";
};

int require(int value, const char* flag) {
  if (value < 0) throw InvalidArgument(std::string("missing ") + flag);
  return value;
}

int run_generate(const GenerateArgs& a) {
  Graph g;
  if (a.family == "lex" || a.family == "cartesian") {
    if (a.left.empty() || a.right.empty()) throw InvalidArgument("products need --left and --right");
    const Graph left = load_graph(a.left);
    const Graph right = load_graph(a.right);
    g = a.family == "lex" ? lexicographic_product(left, right) : cartesian_product(left, right);
  } else if (a.family == "complement" || a.family == "hat") {
    if (a.graph.empty()) throw InvalidArgument(a.family + " needs --graph");
    const Graph base = load_graph(a.graph);
    g = a.family == "hat" ? hat_construction(base) : complement(base);
  } else if (a.family == "bridge") {
    g = bridge_graph(require(a.m, "--m"), require(a.n, "--n"));
  } else {
    const Family family = parse_family(a.family);
    std::vector<int> params;
    switch (family) {
      case Family::cycle_power:
        params = {require(a.big_n, "--N"), require(a.n, "--n")};
        break;
      case Family::star:
        params = {a.k >= 0 ? a.k : require(a.n, "--k")};
        break;
      default:
        params = {require(a.n, "--n")};
    }
    g = generate(family, params);
  }
  const GraphFormat format = a.format == "edgelist" ? GraphFormat::edgelist : GraphFormat::graph6;
  std::string text = serialize_graph(g, format);
  std::cout << text;
  if (text.empty() || text.back() != '\n') std::cout << '\n';
  return kOk;
}

struct CensusArgs {
  int min = 4;
  int max = 12;
  std::string out;
  std::string detail;
  std::string cache_dir = ".domgame-cache";
  int jobs = 1;
};

int run_census(const CensusArgs& a) {
  if (a.min < 4 || a.max < a.min) throw InvalidArgument("census needs 4 <= --min <= --max");
  CensusOptions opts;
  opts.jobs = a.jobs;
  opts.cache_dir = a.cache_dir;
  Output table(a.out);
  std::optional<Output> detail;
  if (!a.detail.empty()) {
    detail.emplace(a.detail);
    detail->stream() << detail_tsv_header();
  }
  table.stream() << census_tsv_header();
  for (int n = a.min; n <= a.max; ++n) {
    const auto records = tree_records(n, opts);
    table.stream() << census_tsv_line(row_from_records(n, records)) << std::flush;
    if (detail) {
      for (const auto& r : records) detail->stream() << detail_tsv_line(r);
    }
  }
  return kOk;
}

struct VerifyArgs {
  std::string suite = "all";
  int max_order = 7;
  int max_tree_order = 12;
  std::string out;
  std::string counterexample = "counterexample.g6";
  int jobs = 1;
};

int run_verify(const VerifyArgs& a) {
  Output out(a.out);
  SuiteOptions opts;
  opts.max_order = a.max_order;
  opts.max_tree_order = a.max_tree_order;
  opts.jobs = a.jobs;
  opts.counterexample_path = a.counterexample;
  opts.sink = [&](const CheckReport& r) {
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(r.to_json());
    nlohmann::ordered_json line;
    line["suite"] = a.suite;
    line.update(j);
    out.stream() << line.dump() << '\n';
    if (r.failed()) std::cerr << "FAIL " << r.claim << " on " << r.graph6 << (r.note.empty() ? "" : ": " + r.note) << '\n';
  };
  const SuiteResult result = run_suite(a.suite, opts);
  std::cerr << a.suite << ": " << result.reports.size() << " checks, " << result.count(CheckStatus::pass) << " pass, "
            << result.count(CheckStatus::vacuous) << " vacuous, " << result.count(CheckStatus::fail) << " fail, "
            << result.graphs_touched << " graphs profiled\n";
  if (result.failed) std::cerr << "counterexample written to " << a.counterexample << '\n';
  return result.failed ? kClaimFailed : kOk;
}

struct ConjectureArgs {
  int max_order = 12;
  std::string cache_dir = ".domgame-cache";
  std::string counterexample = "counterexample.g6";
  int jobs = 1;
};

int run_conjecture(const ConjectureArgs& a) {
  CensusOptions opts;
  opts.jobs = a.jobs;
  opts.cache_dir = a.cache_dir;
  const ConjectureReport report = conjecture_scan(a.max_order, opts);
  if (report.passed()) {
    std::cout << "PASS 0 counterexamples\n";
  } else {
    std::cout << "FAIL " << report.l_counterexamples.size() << " counterexamples\n";
    std::ofstream file(a.counterexample, std::ios::trunc);
    for (const auto& g6 : report.l_counterexamples) {
      std::cout << g6 << '\n';
      file << g6 << '\n';
    }
  }
  std::cerr << "weaker LL form: " << report.ll_counterexamples.size() << " counterexamples\n";
  for (const auto& o : report.orders) {
    std::cerr << "  n=" << o.n << " trees=" << o.trees << " l_violations=" << o.l_violations
              << " ll_violations=" << o.ll_violations << '\n';
  }
  return report.passed() ? kOk : kClaimFailed;
}

struct PlayArgs {
  std::string variant = "dom";
  std::string as = "dominator";
  std::string first = "d";
  std::string graph;
};

int run_play(const PlayArgs& a) {
  const Graph g = load_graph(a.graph);
  const Variant variant = parse_variant(a.variant);
  const GameVariant& rules = GameVariant::of(variant);
  const Player human = parse_player(a.as);
  GameSolver engine(g, variant);
  GameState state = GameState::initial(g, parse_player(a.first));
  int moves = 0;
  std::cout << "playing the " << rules.name() << " game on " << to_graph6(g) << " (" << g.order()
            << " vertices) as " << player_name(human) << '\n';
  while (!is_finished(g, rules, state)) {
    std::cout << "covered " << state.covered.to_string();
    if (!state.stalled.empty()) std::cout << " stalled " << state.stalled.to_string();
    std::cout << '\n';
    int v = -1;
    if (state.to_move == human) {
      const VertexSet legal = legal_moves(g, rules, state);
      while (true) {
        std::cout << "your move " << legal.to_string() << "> " << std::flush;
        std::string token;
        if (!(std::cin >> token)) {
          std::cout << "\nend of input, game abandoned\n";
          return kEndOfInput;
        }
        auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec == std::errc{} && end == token.data() + token.size() && v >= 0 && v < g.order() && legal.contains(v)) {
          break;
        }
        std::cout << "illegal move '" << token << "'\n";
      }
    } else {
      v = engine.best_move(state);
      std::cout << player_name(state.to_move) << " plays " << v << '\n';
    }
    state = apply_move(g, rules, state, v);
    ++moves;
  }
  std::cout << "covered " << state.covered.to_string() << '\n' << "game over after " << moves << " moves\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver and verification workbench for domination games"};
  app.require_subcommand(1);

  ValueArgs value_args;
  auto* value_cmd = app.add_subcommand("value", "print the optimal game length");
  value_cmd->add_option("--variant", value_args.variant, "dom|total|z|l|ll")->required();
  value_cmd->add_option("--first", value_args.first, "d|s")->required();
  value_cmd->add_option("--graph", value_args.graph, "graph6 literal, edge list, or file")->required();
  value_cmd->add_option("--covered", value_args.covered, "comma separated pre-dominated vertices");
  value_cmd->add_option("--memo-cap", value_args.memo_cap, "abort once the memo table holds this many states");

  ProfileArgs profile_args;
  auto* profile_cmd = app.add_subcommand("profile", "print gamma, gamma_t and all ten game values");
  profile_cmd->add_option("--graph", profile_args.graph)->required();
  profile_cmd->add_option("--format", profile_args.format)->check(CLI::IsMember({"json", "tsv"}));
  profile_cmd->add_option("--memo-cap", profile_args.memo_cap);

  GenerateArgs gen_args;
  auto* gen_cmd = app.add_subcommand("generate", "build a graph and print it");
  gen_cmd->add_option("--family", gen_args.family,
                      "path|cycle|complete|star|empty|cycle_power|lex|cartesian|complement|hat|bridge")
      ->required();
  gen_cmd->add_option("--n", gen_args.n);
  gen_cmd->add_option("--N", gen_args.big_n);
  gen_cmd->add_option("--k", gen_args.k);
  gen_cmd->add_option("--m", gen_args.m);
  gen_cmd->add_option("--graph", gen_args.graph);
  gen_cmd->add_option("--left", gen_args.left);
  gen_cmd->add_option("--right", gen_args.right);
  gen_cmd->add_option("--format", gen_args.format)->check(CLI::IsMember({"graph6", "edgelist"}));

  CensusArgs census_args;
  auto* census_cmd = app.add_subcommand("census", "tabulate free-tree statistics");
  census_cmd->add_option("--min", census_args.min);
  census_cmd->add_option("--max", census_args.max);
  census_cmd->add_option("--out", census_args.out);
  census_cmd->add_option("--detail", census_args.detail);
  census_cmd->add_option("--cache-dir", census_args.cache_dir, "empty string disables the cache");
  census_cmd->add_option("--jobs", census_args.jobs)->check(CLI::PositiveNumber);

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "run a named verification suite");
  verify_cmd->add_option("--suite", verify_args.suite)->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--max-order", verify_args.max_order);
  verify_cmd->add_option("--max-tree-order", verify_args.max_tree_order);
  verify_cmd->add_option("--out", verify_args.out);
  verify_cmd->add_option("--counterexample", verify_args.counterexample);
  verify_cmd->add_option("--jobs", verify_args.jobs)->check(CLI::PositiveNumber);

  ConjectureArgs conj_args;
  auto* conj_cmd = app.add_subcommand("conjecture", "scan trees for Z-game value below L-game value");
  conj_cmd->add_option("--max-order", conj_args.max_order);
  conj_cmd->add_option("--cache-dir", conj_args.cache_dir);
  conj_cmd->add_option("--counterexample", conj_args.counterexample);
  conj_cmd->add_option("--jobs", conj_args.jobs)->check(CLI::PositiveNumber);

  PlayArgs play_args;
  auto* play_cmd = app.add_subcommand("play", "play against the optimal engine");
  play_cmd->add_option("--variant", play_args.variant)->required();
  play_cmd->add_option("--as", play_args.as, "dominator|staller")->required();
  play_cmd->add_option("--first", play_args.first, "who opens the game, d|s");
  play_cmd->add_option("--graph", play_args.graph)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*value_cmd) return run_value(value_args);
    if (*profile_cmd) return run_profile(profile_args);
    if (*gen_cmd) return run_generate(gen_args);
    if (*census_cmd) return run_census(census_args);
    if (*verify_cmd) return run_verify(verify_args);
    if (*conj_cmd) return run_conjecture(conj_args);
    if (*play_cmd) return run_play(play_args);
  } catch (const IsolatedVertexError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIsolated;
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kResource;
  } catch (const ClaimViolation& e) {
    std::cerr << "claim violated: " << e.what() << '\n';
    return kClaimFailed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
