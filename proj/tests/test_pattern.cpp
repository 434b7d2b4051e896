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

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "bia/pattern.hpp"
#include "doctest.h"
#include "oracle.hpp"

using bia::GroupingConfig;
using bia::ModeSequence;

namespace {

std::string seq(const ModeSequence& s) {
  std::ostringstream out;
  out << '(';
  for (std::size_t n = 0; n < s.size(); ++n) out << (n ? "," : "") << s[n];
  out << ')';
  return out.str();
}

// "(m1 over one element block)x(m2 over the group blocks)" for one user.
std::string factored(const bia::PresetPattern& p, std::size_t u) {
  ModeSequence m1, m2;
  for (std::size_t j = 0; j < p.element_length; ++j) m1.push_back(p.at(u, j).element);
  for (std::size_t j = 0; j < p.group_length; ++j) m2.push_back(p.at(u, j * p.element_length).group);
  return seq(m1) + "x" + seq(m2);
}

GroupingConfig example() {
  return GroupingConfig::from_mode_groups({6, 6, 4, 4}, {{6, 4}, {6, 4}}, {2, 2});
}

std::vector<int> random_modes(std::mt19937_64& rng, std::size_t K, int hi) {
  std::uniform_int_distribution<int> d(2, hi);
  std::vector<int> m(K);
  for (auto& v : m) v = d(rng);
  return m;
}

}  // namespace

TEST_CASE("base pattern goldens") {
  auto p32 = bia::base_pattern(std::vector<int>{3, 2});
  REQUIRE(p32.size() == 2);
  CHECK(seq(p32[0]) == "(1,2,3,1,2)");
  CHECK(seq(p32[1]) == "(1,1,1,2,2)");

  auto p22 = bia::base_pattern(std::vector<int>{2, 2});
  CHECK(seq(p22[0]) == "(1,2,1)");
  CHECK(seq(p22[1]) == "(1,1,2)");

  auto p1 = bia::base_pattern(std::vector<int>{5});
  CHECK(seq(p1[0]) == "(1,2,3,4,5)");
}

TEST_CASE("grouped pattern of the {6,6,4,4} example") {
  auto c = example();
  auto p = bia::grouped_pattern(c);
  CHECK(p.length() == 15);
  CHECK(factored(p, c.index({0, 0})) == "(1,2,3,1,2)x(1,2,1)");
  CHECK(factored(p, c.index({1, 0})) == "(1,1,1,2,2)x(1,2,1)");
  CHECK(factored(p, c.index({0, 1})) == "(1,2,3,1,2)x(1,1,2)");
  CHECK(factored(p, c.index({1, 1})) == "(1,1,1,2,2)x(1,1,2)");

  // physical mode (m2 - 1) * M_E + m1 for user [1,1]
  CHECK(seq(p.physical(0)) == "(1,2,3,1,2,4,5,6,4,5,1,2,3,1,2)");
  CHECK(seq(p.physical(1)) == "(1,1,1,2,2,3,3,3,4,4,1,1,1,2,2)");
}

TEST_CASE("cartesian product is group-major") {
  auto prod = bia::sequence_cartesian_product(std::vector<int>{1, 2}, std::vector<int>{1, 2, 1});
  std::vector<std::pair<int, int>> want{{1, 1}, {2, 1}, {1, 2}, {2, 2}, {1, 1}, {2, 1}};
  CHECK(prod == want);
  CHECK_THROWS_AS(bia::sequence_cartesian_product(std::vector<int>{}, std::vector<int>{1}), std::invalid_argument);
}

TEST_CASE("stream slots of the example") {
  auto c = example();
  auto s11 = bia::flat_stream_slots(std::vector<int>{3, 2}, 0);
  CHECK(s11 == std::vector<std::vector<std::size_t>>{{0, 1, 2}});
  auto s21 = bia::flat_stream_slots(std::vector<int>{3, 2}, 1);
  CHECK(s21 == std::vector<std::vector<std::size_t>>{{0, 3}, {1, 4}});
  auto g1 = bia::flat_stream_slots(std::vector<int>{2, 2}, 0);
  CHECK(g1 == std::vector<std::vector<std::size_t>>{{0, 1}});
}

TEST_CASE("flat pattern property: length and per-stream mode coverage") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t K = 1 + rng() % 6;
    auto modes = random_modes(rng, K, 6);
    if (oracle::count_tuples(modes).length > 20000) continue;
    CAPTURE(trial);
    auto pat = bia::base_pattern(modes);
    auto counts = oracle::count_tuples(modes);
    REQUIRE(pat.size() == K);
    CHECK(bia::flat_length(modes) == counts.length);
    for (const auto& row : pat) CHECK(row.size() == counts.length);

    // every slot is a distinct mode tuple with at most one user on its top mode
    std::set<std::vector<int>> tuples;
    for (std::size_t t = 0; t < counts.length; ++t) {
      std::vector<int> v;
      int top = 0;
      for (std::size_t k = 0; k < K; ++k) {
        v.push_back(pat[k][t]);
        top += pat[k][t] == modes[k];
        CHECK(pat[k][t] >= 1);
        CHECK(pat[k][t] <= modes[k]);
      }
      CHECK(top <= 1);
      tuples.insert(v);
    }
    CHECK(tuples.size() == counts.length);

    for (std::size_t k = 0; k < K; ++k) {
      // slots grouped by the other users' modes, keeping groups where k covers all modes
      std::map<std::vector<int>, std::vector<std::size_t>> by_others;
      for (std::size_t t = 0; t < counts.length; ++t) {
        std::vector<int> others;
        for (std::size_t q = 0; q < K; ++q)
          if (q != k) others.push_back(pat[q][t]);
        by_others[others].push_back(t);
      }
      std::set<std::vector<std::size_t>> expected;
      for (const auto& [others, slots] : by_others) {
        std::set<int> seen;
        for (auto t : slots) seen.insert(pat[k][t]);
        if (static_cast<int>(seen.size()) == modes[k] && static_cast<int>(slots.size()) == modes[k])
          expected.insert(slots);
      }
      auto got = bia::flat_stream_slots(modes, k);
      CHECK(got.size() == counts.streams[k]);
      CHECK(std::set<std::vector<std::size_t>>(got.begin(), got.end()) == expected);
      for (const auto& slots : got) {
        std::set<int> visited;
        for (auto t : slots) visited.insert(pat[k][t]);
        CHECK(static_cast<int>(visited.size()) == modes[k]);
        CHECK(slots.size() == static_cast<std::size_t>(modes[k]));
      }
    }
  }
}

TEST_CASE("single group reproduces the flat pattern byte for byte") {
  for (std::vector<int> modes : {std::vector<int>{6, 6, 4, 4}, {3, 2}, {2, 2, 2}, {5}, {4, 3, 2, 2}}) {
    auto c = GroupingConfig::flat(modes);
    auto p = bia::grouped_pattern(c);
    auto base = bia::base_pattern(modes);
    REQUIRE(p.group_length == 1);
    for (std::size_t u = 0; u < c.users(); ++u) {
      CHECK(p.physical(u) == base[c.member(u)]);
      for (std::size_t t = 0; t < p.length(); ++t) CHECK(p.at(u, t).group == 1);
    }
  }
}

TEST_CASE("grouped pattern is the product of the two factor patterns") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t KE = 1 + rng() % 3, KG = 2 + rng() % 2;
    auto me = random_modes(rng, KE, 3);
    auto mg = random_modes(rng, KG, 3);
    std::vector<int> equipped;
    std::vector<std::vector<int>> groups;
    for (std::size_t i = 0; i < KG; ++i) {
      std::vector<int> g;
      for (std::size_t k = 0; k < KE; ++k) g.push_back(me[k] * mg[i]);
      groups.push_back(g);
      equipped.insert(equipped.end(), g.begin(), g.end());
    }
    CAPTURE(trial);
    auto c = GroupingConfig::from_mode_groups(equipped, groups, mg);
    auto p = bia::grouped_pattern(c);
    std::vector<int> E(c.element_counts().begin(), c.element_counts().end());
    std::vector<int> G(c.group_mode_counts().begin(), c.group_mode_counts().end());
    auto b1 = bia::base_pattern(E);
    auto b2 = bia::base_pattern(G);
    CHECK(p.length() == oracle::grouped_length(E, G));
    CHECK(bia::grouped_length(c) == p.length());
    for (std::size_t u = 0; u < c.users(); ++u) {
      auto r = c.ref(u);
      for (std::size_t j2 = 0; j2 < p.group_length; ++j2)
        for (std::size_t j1 = 0; j1 < p.element_length; ++j1) {
          const auto& m = p.at(u, j2 * p.element_length + j1);
          CHECK(m.element == b1[r.k][j1]);
          CHECK(m.group == b2[r.i][j2]);
          CHECK(m.physical == (m.group - 1) * E[r.k] + m.element);
          CHECK(m.physical <= c.used_modes(u));
        }
    }
  }
}

TEST_CASE("length formula: closed forms and overflow") {
  CHECK(bia::flat_length(std::vector<int>{6, 6, 6, 6, 6, 6}) == 34375);
  CHECK(oracle::count_tuples({6, 6, 6, 6, 6, 6}).length == 34375);
  CHECK(bia::flat_length(std::vector<int>{6, 6, 4, 4}) == 465);
  CHECK(bia::grouped_length(example()) == 15);
  CHECK_THROWS_AS(bia::flat_length(std::vector<int>(40, 1000)), std::overflow_error);
  CHECK_THROWS_AS(bia::base_pattern(std::vector<int>{3, 1}), bia::ConfigError);
  CHECK_THROWS_AS(bia::base_pattern(std::vector<int>{}), bia::ConfigError);
}

TEST_CASE("pattern table rendering") {
  auto c = example();
  auto text = bia::render_pattern_table(bia::grouped_pattern(c), c);
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  CHECK(line == "# bia-pattern v1 config=" + c.canonical() + " length=15");
  std::getline(in, line);
  CHECK(line == "slot [1,1] [2,1] [1,2] [2,2]");
  std::getline(in, line);
  CHECK(line == "1 1.1/1 1.1/1 1.1/1 1.1/1");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 14);
}
