// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <set>

#include "bia/optimizer.hpp"
#include "bia/pattern.hpp"
#include "bia/report.hpp"
#include "doctest.h"
#include "oracle.hpp"

using bia::Budget;
using bia::Exec;
using bia::GroupingConfig;
using bia::Rational;
using bia::SearchSpace;

namespace {

std::vector<Budget> budgets(std::uint64_t lo, std::uint64_t hi) {
  std::vector<Budget> out;
  for (auto L = lo; L <= hi; ++L) out.push_back(L);
  out.push_back(std::nullopt);
  return out;
}

void same_best(const std::optional<bia::Candidate>& got, const std::optional<oracle::Entry>& want) {
  REQUIRE(got.has_value() == want.has_value());
  if (!got) return;
  CHECK(got->dof == want->dof);
  CHECK(got->length == want->length);
  CHECK(got->config.num_groups() == want->groups);
}

}  // namespace

TEST_CASE("enumeration covers exactly the valid configurations up to relabeling") {
  for (auto equipped : {std::vector<int>{6, 6, 4, 4}, {4, 4, 4, 4}, {6, 4}, {9, 6}, {6, 6, 6, 6}, {5, 3, 4}}) {
    for (bool reduction : {true, false}) {
      SearchSpace space{equipped, std::nullopt, {}, reduction, false};
      auto configs = bia::enumerate_configs(space);
      auto brute = oracle::brute_force(equipped, reduction);
      CAPTURE(configs.size());
      std::set<std::string> names;
      for (const auto& c : configs) names.insert(c.canonical());
      CHECK(names.size() == configs.size());  // no duplicates
      std::set<std::string> brute_names;
      for (const auto& e : brute) brute_names.insert(e.canonical);
      for (const auto& n : names) CHECK(brute_names.count(n) == 1);
      // every valid config has an equivalent enumerated one with equal DoF and length
      std::multiset<std::tuple<Rational, std::uint64_t, std::size_t>> a, b;
      for (const auto& c : bia::evaluate(configs)) a.insert({c.dof, c.length, c.config.num_groups()});
      for (const auto& e : brute) b.insert({e.dof, e.length, e.groups});
      std::set<std::tuple<Rational, std::uint64_t, std::size_t>> sa(a.begin(), a.end()), sb(b.begin(), b.end());
      CHECK(sa == sb);
    }
  }
}

TEST_CASE("example configurations are enumerated") {
  SearchSpace space{{6, 6, 4, 4}, std::nullopt, {}, true, false};
  auto configs = bia::enumerate_configs(space);
  auto has = [&](const GroupingConfig& c) { return std::find(configs.begin(), configs.end(), c) != configs.end(); };
  CHECK(has(GroupingConfig::from_mode_groups({6, 6, 4, 4}, {{6, 4}, {6, 4}}, {2, 2})));
  CHECK(has(GroupingConfig::flat({6, 6, 4, 4})));
  CHECK(configs.front().is_flat());
}

TEST_CASE("optimum matches the brute-force search for every budget") {
  for (auto equipped : {std::vector<int>{6, 6, 4, 4}, {4, 4, 4, 4}, {9, 6}, {6, 6, 6, 6}}) {
    auto brute = oracle::brute_force(equipped, true);
    SearchSpace space{equipped, std::nullopt, {}, true, false};
    auto bs = budgets(1, 80);
    auto result = bia::sweep(space, bs);
    SearchSpace strict = space;
    strict.require_grouping = true;
    auto result2 = bia::sweep(strict, bs);
    for (std::size_t n = 0; n < bs.size(); ++n) {
      CAPTURE(bia::format_budget(bs[n]));
      same_best(result.rows[n].conventional, oracle::best(brute, bs[n], 1, 1));
      same_best(result.rows[n].grouped, oracle::best(brute, bs[n], 1, 99));
      same_best(result2.rows[n].grouped, oracle::best(brute, bs[n], 2, 99));
    }
  }
}

TEST_CASE("the {6,6,4,4} strategies at L = 15") {
  SearchSpace space{{6, 6, 4, 4}, 15, {}, true, false};
  auto best = bia::optimize(space);
  REQUIRE(best.grouped);
  REQUIRE(best.conventional);
  CHECK(best.grouped->dof == Rational(28, 15));
  CHECK(best.grouped->length == 15);
  CHECK(best.grouped->config == GroupingConfig::from_mode_groups({6, 6, 4, 4}, {{6, 4}, {6, 4}}, {2, 2}));
  CHECK(best.conventional->dof == Rational(22, 13));
  CHECK(best.conventional->length == 13);
  CHECK(best.grouped->dof > best.conventional->dof);
}

TEST_CASE("homogeneous (6,6) maxima") {
  SearchSpace space{{6, 6, 6, 6, 6, 6}, std::nullopt, {}, true, true};
  auto best = bia::optimize(space);
  REQUIRE(best.conventional);
  REQUIRE(best.grouped);
  CHECK(best.conventional->dof == Rational(36, 11));
  CHECK(best.conventional->length == 34375);
  CHECK(best.grouped->dof == Rational(12, 5));
  CHECK(best.grouped->length == 60);
  CHECK(best.grouped->config.num_groups() == 2);

  auto conv = oracle::homogeneous_best(6, 6, std::nullopt, 1);
  auto grp = oracle::homogeneous_best(6, 6, std::nullopt, 2);
  CHECK(conv->dof == Rational(36, 11));
  CHECK(grp->dof == Rational(12, 5));
  CHECK(grp->length == 60);
  CHECK(grp->groups == 2);
  for (std::uint64_t L : {20u, 60u, 200u}) {
    space.budget = L;
    auto b = bia::optimize(space);
    CAPTURE(L);
    same_best(b.grouped, oracle::homogeneous_best(6, 6, L, 2));
  }
}

TEST_CASE("infeasible and degenerate search spaces") {
  SearchSpace tiny{{6, 6, 4, 4}, 1, {}, true, false};
  auto best = bia::optimize(tiny);
  CHECK_FALSE(best.conventional);
  CHECK_FALSE(best.grouped);

  // a prime number of users leaves only K_G = 1 and K_G = K
  SearchSpace prime{{6, 6, 6}, std::nullopt, {}, true, false};
  for (const auto& c : bia::enumerate_configs(prime)) CHECK((c.num_groups() == 1 || c.num_groups() == 3));

  SearchSpace filtered{{6, 6, 6, 6}, std::nullopt, {2}, true, false};
  for (const auto& c : bia::enumerate_configs(filtered)) CHECK((c.num_groups() == 1 || c.num_groups() == 2));

  SearchSpace bad{{6, 1}, std::nullopt, {}, true, false};
  CHECK_THROWS_AS(bia::enumerate_configs(bad), bia::ConfigError);
  SearchSpace zero{{6, 6}, 0, {}, true, false};
  CHECK_THROWS_AS(bia::optimize(zero), bia::ConfigError);
}

TEST_CASE("sweep frontiers are monotone and grouping never loses") {
  SearchSpace space{{6, 6, 4, 4}, std::nullopt, {}, true, false};
  auto result = bia::sweep(space, budgets(1, 120));
  Rational prev_c = 0, prev_g = 0;
  for (const auto& row : result.rows) {
    Rational c = row.conventional ? row.conventional->dof : Rational(0);
    Rational g = row.grouped ? row.grouped->dof : Rational(0);
    CHECK(c >= prev_c);
    CHECK(g >= prev_g);
    CHECK(g >= c);
    prev_c = c;
    prev_g = g;
  }
  auto band = bia::analyse_band(result, std::pair<std::uint64_t, std::uint64_t>{10, 35});
  REQUIRE(band.advantage);
  CHECK(band.advantage->first == 9);
  CHECK(band.advantage->second == 39);
  CHECK(band.flat_tail);
  CHECK(band.flat_from == Budget{40});
  CHECK(band.equal_after_flat);
  CHECK_FALSE(band.notes.empty());
}

TEST_CASE("sweep rows are verified numerically") {
  SearchSpace space{{6, 6, 4, 4}, std::nullopt, {}, true, false};
  std::vector<Budget> bs{9, 15, 40};
  auto result = bia::sweep(space, bs);
  std::vector<std::uint64_t> seeds{1, 2};
  auto report = bia::verify_sweep(result, seeds);
  CHECK(report.all_verified());
  for (const auto& row : result.rows) CHECK(row.verified == std::optional<bool>(true));

  auto bad = bia::verify_request({{6, 6, 4, 4}, {}, {{0, 2}, {1, 3}}, {3, 2}}, seeds);
  CHECK_FALSE(bad.verified);
  CHECK(bad.reason.find("divides") != std::string::npos);
}

TEST_CASE("serial and parallel searches agree") {
  SearchSpace space{{6, 6, 6, 4, 4, 4}, std::nullopt, {}, true, false};
  auto configs = bia::enumerate_configs(space);
  auto cs = bia::evaluate(configs, Exec::serial);
  auto cp = bia::evaluate(configs, Exec::parallel);
  REQUIRE(cs.size() == cp.size());
  for (std::size_t n = 0; n < cs.size(); ++n) {
    CHECK(cs[n].dof == cp[n].dof);
    CHECK(cs[n].length == cp[n].length);
  }
  for (Budget L : {Budget{10}, Budget{30}, Budget{300}, Budget{}}) {
    for (bool grouped_only : {false, true}) {
      auto a = bia::best_within(cs, L, grouped_only, false, Exec::serial);
      auto b = bia::best_within(cs, L, grouped_only, false, Exec::parallel);
      REQUIRE(a.has_value() == b.has_value());
      if (a) CHECK(a->config == b->config);
    }
  }
}
