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

#include "domgame/tree_census.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "domgame/domination.hpp"
#include "domgame/errors.hpp"
#include "domgame/graph_io.hpp"

namespace domgame {

namespace {

struct Split {
  std::vector<int> left;  // first subtree of the root, re-rooted
  std::vector<int> rest;  // the tree with that subtree removed
};

Split split_tree(const std::vector<int>& layout) {
  std::size_t m = layout.size();
  bool seen_one = false;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (layout[i] == 1) {
      if (seen_one) {
        m = i;
        break;
      }
      seen_one = true;
    }
  }
  Split out;
  for (std::size_t i = 1; i < m; ++i) out.left.push_back(layout[i] - 1);
  out.rest.push_back(0);
  for (std::size_t i = m; i < layout.size(); ++i) out.rest.push_back(layout[i]);
  return out;
}

/// Beyer-Hedetniemi successor of a rooted level sequence, starting the
/// rewrite at position p (default: last position with level > 1).
std::optional<std::vector<int>> next_rooted_tree(const std::vector<int>& prev, std::optional<std::size_t> start = {}) {
  std::size_t p;
  if (start) {
    p = *start;
  } else {
    p = prev.size() - 1;
    while (p > 0 && prev[p] == 1) --p;
  }
  if (p == 0) return std::nullopt;
  std::size_t q = p - 1;
  while (prev[q] != prev[p] - 1) --q;
  std::vector<int> out = prev;
  for (std::size_t i = p; i < out.size(); ++i) out[i] = out[i - p + q];
  return out;
}

/// Accepts the candidate if it is the canonical (centered) level sequence of
/// its free tree, else jumps to the next candidate that can be.
std::vector<int> next_free_candidate(const std::vector<int>& candidate) {
  const Split split = split_tree(candidate);
  const int left_height = *std::max_element(split.left.begin(), split.left.end());
  const int rest_height = *std::max_element(split.rest.begin(), split.rest.end());
  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (split.left.size() > split.rest.size()) {
      valid = false;
    } else if (split.left.size() == split.rest.size() && split.left > split.rest) {
      valid = false;
    }
  }
  if (valid) return candidate;

  const std::size_t p = split.left.size();
  std::vector<int> jumped = *next_rooted_tree(candidate, p);
  if (candidate[p] > 2) {
    const Split again = split_tree(jumped);
    const int height = *std::max_element(again.left.begin(), again.left.end());
    const std::size_t suffix = static_cast<std::size_t>(height) + 1;
    for (std::size_t i = 0; i < suffix; ++i) jumped[jumped.size() - suffix + i] = static_cast<int>(i) + 1;
  }
  return jumped;
}

void check_tree_order(int n) {
  if (n < 1 || n > kMaxVertices) throw InvalidArgument("tree order must lie in [1, " + std::to_string(kMaxVertices) + "]");
}

}  // namespace

FreeTreeGenerator::FreeTreeGenerator(int n) : n_(n) {
  check_tree_order(n);
  std::vector<int> path_layout;
  for (int i = 0; i <= n / 2; ++i) path_layout.push_back(i);
  for (int i = 1; i < (n + 1) / 2; ++i) path_layout.push_back(i);
  pending_ = std::move(path_layout);
}

std::optional<std::vector<int>> FreeTreeGenerator::next() {
  if (n_ == 1) {
    if (started_) return std::nullopt;
    started_ = true;
    return std::vector<int>{0};
  }
  if (started_ && pending_) pending_ = next_rooted_tree(*pending_);
  started_ = true;
  if (!pending_) return std::nullopt;
  pending_ = next_free_candidate(*pending_);
  return pending_;
}

Graph tree_from_level_sequence(const std::vector<int>& levels) {
  const int n = static_cast<int>(levels.size());
  std::vector<Edge> edges;
  std::vector<int> last_at_level(levels.size() + 1, -1);
  for (int i = 0; i < n; ++i) {
    const int level = levels[static_cast<std::size_t>(i)];
    if (i == 0 ? level != 0 : (level < 1 || level > levels[static_cast<std::size_t>(i - 1)] + 1)) {
      throw InvalidArgument("not a rooted-tree level sequence");
    }
    if (level > 0) edges.emplace_back(last_at_level[static_cast<std::size_t>(level - 1)], i);
    last_at_level[static_cast<std::size_t>(level)] = i;
  }
  return Graph::from_edges(n, edges);
}

void for_each_free_tree(int n, const std::function<void(const Graph&)>& visit) {
  FreeTreeGenerator gen(n);
  while (auto levels = gen.next()) visit(tree_from_level_sequence(*levels));
}

std::vector<Graph> free_trees(int n) {
  std::vector<Graph> out;
  for_each_free_tree(n, [&](const Graph& t) { out.push_back(t); });
  return out;
}

TreeRecord evaluate_tree(const Graph& tree, SolverOptions options) {
  TreeRecord r;
  r.graph6 = to_graph6(tree);
  r.gamma = gamma(tree);
  r.gamma_t = gamma_t(tree);
  r.dom = game_value(tree, Variant::dom, Player::dominator, std::nullopt, options);
  r.total = game_value(tree, Variant::total, Player::dominator, std::nullopt, options);
  r.z = game_value(tree, Variant::z, Player::dominator, std::nullopt, options);
  r.l = game_value(tree, Variant::l, Player::dominator, std::nullopt, options);
  r.ll = game_value(tree, Variant::ll, Player::dominator, std::nullopt, options);
  const bool ordered = r.gamma <= r.z && r.z <= r.dom && r.dom <= r.l && r.l <= r.ll && r.z <= r.total &&
                       r.total <= r.l && r.gamma_t <= r.total;
  if (!ordered) throw ClaimViolation("game hierarchy violated on tree " + r.graph6, r.graph6);
  return r;
}

namespace {

std::filesystem::path cache_file(const CensusOptions& options, int n) {
  return options.cache_dir /
         ("census-v" + std::to_string(kCensusSolverVersion) + "-n" + std::to_string(n) + "-detail.tsv");
}

std::optional<std::vector<TreeRecord>> load_cached(const CensusOptions& options, int n) {
  if (options.cache_dir.empty()) return std::nullopt;
  std::ifstream in(cache_file(options, n));
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_detail_tsv(buf.str());
  } catch (const ParseError&) {
    return std::nullopt;  // a torn write is recomputed
  }
}

void store_cached(const CensusOptions& options, int n, const std::vector<TreeRecord>& records) {
  if (options.cache_dir.empty()) return;
  std::filesystem::create_directories(options.cache_dir);
  const auto target = cache_file(options, n);
  const auto partial = std::filesystem::path(target).concat(".partial");
  {
    std::ofstream out(partial, std::ios::binary | std::ios::trunc);
    out << detail_tsv_header();
    for (const auto& r : records) out << detail_tsv_line(r);
  }
  std::filesystem::rename(partial, target);
}

std::vector<TreeRecord> compute_records(int n, const CensusOptions& options) {
  FreeTreeGenerator generator(n);
  std::mutex generator_lock;
  std::mutex result_lock;
  std::vector<TreeRecord> records;
  std::exception_ptr failure;

  auto worker = [&] {
    try {
      constexpr int kBatch = 32;
      for (;;) {
        std::vector<std::vector<int>> batch;
        {
          std::lock_guard lock(generator_lock);
          if (failure) return;
          while (static_cast<int>(batch.size()) < kBatch) {
            auto next = generator.next();
            if (!next) break;
            batch.push_back(std::move(*next));
          }
        }
        if (batch.empty()) return;
        std::vector<TreeRecord> done;
        for (const auto& levels : batch) done.push_back(evaluate_tree(tree_from_level_sequence(levels), options.solver));
        std::lock_guard lock(result_lock);
        records.insert(records.end(), done.begin(), done.end());
      }
    } catch (...) {
      std::lock_guard lock(generator_lock);
      if (!failure) failure = std::current_exception();
    }
  };

  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  std::sort(records.begin(), records.end(),
            [](const TreeRecord& a, const TreeRecord& b) { return a.graph6 < b.graph6; });
  return records;
}

}  // namespace

std::vector<TreeRecord> tree_records(int n, const CensusOptions& options) {
  check_tree_order(n);
  if (n < 2) throw InvalidArgument("the games need trees with at least two vertices");
  if (auto cached = load_cached(options, n)) return *cached;
  auto records = compute_records(n, options);
  store_cached(options, n, records);
  return records;
}

CensusRow row_from_records(int n, const std::vector<TreeRecord>& records) {
  CensusRow row;
  row.n = n;
  for (const auto& r : records) {
    ++row.total;
    row.eq_dom += r.z == r.dom;
    row.eq_total_game += r.z == r.total;
    row.eq_gamma += r.z == r.gamma;
    row.gt_gamma_t += r.z > r.gamma_t;
    row.lt_gamma_t += r.z < r.gamma_t;
  }
  return row;
}

CensusRow census_row(int n, const CensusOptions& options) {
  if (n < 4) throw InvalidArgument("census rows start at order 4");
  return row_from_records(n, tree_records(n, options));
}

std::string census_tsv_header() { return "n\tT\teq_gg\teq_tg\teq_gamma\tgt_gammat\tlt_gammat\n"; }

std::string census_tsv_line(const CensusRow& row) {
  std::ostringstream out;
  out << row.n << '\t' << row.total << '\t' << row.eq_dom << '\t' << row.eq_total_game << '\t' << row.eq_gamma
      << '\t' << row.gt_gamma_t << '\t' << row.lt_gamma_t << '\n';
  return out.str();
}

std::string detail_tsv_header() { return "graph6\tgamma\tgamma_t\tdom_d\ttotal_d\tz_d\tl_d\tll_d\n"; }

std::string detail_tsv_line(const TreeRecord& r) {
  std::ostringstream out;
  out << r.graph6 << '\t' << r.gamma << '\t' << r.gamma_t << '\t' << r.dom << '\t' << r.total << '\t' << r.z << '\t'
      << r.l << '\t' << r.ll << '\n';
  return out.str();
}

std::vector<TreeRecord> parse_detail_tsv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line + "\n" != detail_tsv_header()) throw ParseError("missing census detail header");
  std::vector<TreeRecord> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    TreeRecord r;
    if (!(fields >> r.graph6 >> r.gamma >> r.gamma_t >> r.dom >> r.total >> r.z >> r.l >> r.ll)) {
      throw ParseError("malformed census detail line: " + line);
    }
    out.push_back(std::move(r));
  }
  return out;
}

ConjectureReport conjecture_scan(int n_max, const CensusOptions& options) {
  if (n_max < 2 || n_max > kMaxVertices) {
    throw InvalidArgument("conjecture scan needs 2 <= n_max <= " + std::to_string(kMaxVertices));
  }
  ConjectureReport report;
  for (int n = 2; n <= n_max; ++n) {
    ConjectureOrder order;
    order.n = n;
    for (const TreeRecord& r : tree_records(n, options)) {
      ++order.trees;
      if (r.z >= r.l) {
        ++order.l_violations;
        report.l_counterexamples.push_back(r.graph6);
      }
      if (r.z >= r.ll) {
        ++order.ll_violations;
        report.ll_counterexamples.push_back(r.graph6);
      }
    }
    report.orders.push_back(order);
  }
  return report;
}

}  // namespace domgame
