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

#include <string>

#include "bia/grouping.hpp"
#include "doctest.h"

using bia::ConfigError;
using bia::GroupingConfig;
using bia::GroupingRequest;

namespace {

std::string rejection(const GroupingRequest& r) {
  try {
    GroupingConfig::validate(r);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "accepted";
}

}  // namespace

TEST_CASE("the example grouping") {
  auto c = GroupingConfig::validate({{6, 6, 4, 4}, {}, {{0, 2}, {1, 3}}, {2, 2}});
  CHECK(c.num_groups() == 2);
  CHECK(c.group_size() == 2);
  CHECK(c.element_counts()[0] == 3);
  CHECK(c.element_counts()[1] == 2);
  CHECK(c.canonical() == "KG=2;G1=[6,4]/MG2;G2=[6,4]/MG2;used=6,4,6,4");
  CHECK(c.label(0) == "[1,1]");
  CHECK(c.label(3) == "[2,2]");
  CHECK(c.member(1) == 2);
  CHECK(c == GroupingConfig::from_mode_groups({6, 6, 4, 4}, {{6, 4}, {6, 4}}, {2, 2}));
  // members are ordered by used modes inside a group
  CHECK(c == GroupingConfig::validate({{6, 6, 4, 4}, {}, {{2, 0}, {3, 1}}, {2, 2}}));
}

TEST_CASE("single group defaults") {
  auto c = GroupingConfig::validate({{6, 4, 6}, {}, {}, {}});
  CHECK(c.is_flat());
  CHECK(c.group_mode_counts()[0] == 1);
  CHECK(c.member(1) == 1);  // original order kept
  CHECK(c.canonical() == "KG=1;G1=[6,4,6]/MG1;used=6,4,6");
  CHECK(c == GroupingConfig::flat({6, 4, 6}));
  auto r = GroupingConfig::validate({{6, 4, 6}, {3, 2, 5}, {}, {}});
  CHECK(r.used_modes(2) == 5);
  CHECK(r.equipped_modes(2) == 6);
}

TEST_CASE("each violated invariant is named") {
  CHECK(rejection({{}, {}, {}, {}}) == "user count K >= 1");
  CHECK(rejection({{6, 1}, {}, {}, {}}).find("M_k >= 2") != std::string::npos);
  CHECK(rejection({{6, 4}, {6}, {}, {}}) == "used-mode list has one entry per user");
  CHECK(rejection({{6, 4}, {1, 4}, {}, {}}) == "used modes M' >= 2 for every user");
  CHECK(rejection({{6, 4}, {6, 5}, {}, {}}) == "used modes M' <= equipped modes for every user");
  CHECK(rejection({{6, 6, 4}, {}, {{0, 1}, {2}}, {2, 2}}) == "K divisible by K_G");
  CHECK(rejection({{6, 6, 4, 4}, {}, {{0, 1, 2}, {3}}, {2, 2}}) == "every group has exactly K_E = K / K_G users");
  CHECK(rejection({{6, 6, 4, 4}, {}, {{0, 1}, {1, 3}}, {2, 2}}).find("groups partition the users") == 0);
  CHECK(rejection({{6, 6, 4, 4}, {}, {{0, 1}, {2, 7}}, {2, 2}}) == "group member refers to an existing user");
  CHECK(rejection({{6, 6, 4, 4}, {}, {{0, 2}, {1, 3}}, {2}}) == "one mode-group count M_G per group");
  CHECK(rejection({{6, 4}, {}, {}, {2}}) == "a single group requires M_G = 1 (conventional scheme)");
  CHECK(rejection({{6, 6, 4, 4}, {}, {{0, 2}, {1, 3}}, {1, 2}}) == "M_G >= 2 for every group when K_G >= 2");
  CHECK(rejection({{6, 6, 4, 4}, {}, {{0, 2}, {1, 3}}, {4, 2}}) ==
        "M_G of group 1 divides the used modes of its members");
  CHECK(rejection({{6, 6, 4, 4}, {}, {{0, 2}, {1, 3}}, {3, 2}}).find("M_G of group 1") == 0);
  CHECK(rejection({{6, 6, 4, 4}, {}, {{0, 2}, {1, 3}}, {3, 3}}).find("divides") != std::string::npos);
  CHECK(rejection({{4, 4}, {}, {{0}, {1}}, {4, 4}}) == "element counts M_E >= 2 when K_G >= 2");
  CHECK(rejection({{6, 6, 4, 4}, {}, {{0, 1}, {2, 3}}, {2, 2}}).find("element count M_E at position 1") == 0);
}

TEST_CASE("from_mode_groups binding") {
  CHECK_THROWS_WITH_AS(GroupingConfig::from_mode_groups({6, 6, 4, 4}, {{6, 6}, {6, 4}}, {2, 2}),
                       "group entry 6 matches an unassigned user", ConfigError);
  auto c = GroupingConfig::from_mode_groups({4, 6, 4, 6}, {{6, 4}, {6, 4}}, {2, 2});
  CHECK(c.member(c.index({0, 0})) == 1);
  CHECK(c.member(c.index({1, 0})) == 0);
  CHECK(c.member(c.index({0, 1})) == 3);
  CHECK(c.member(c.index({1, 1})) == 2);
}

TEST_CASE("reduced modes inside groups") {
  // equipped 6,6,4,4 using 4,4,4,4: M_G = 2 and M_E = {2,2}
  auto c = GroupingConfig::from_mode_groups({6, 6, 4, 4}, {{6, 4}, {6, 4}}, {2, 2}, {4, 4, 4, 4});
  CHECK(c.element_counts()[0] == 2);
  CHECK(c.element_counts()[1] == 2);
  CHECK(c.canonical() == "KG=2;G1=[6,4]/MG2;G2=[6,4]/MG2;used=4,4,4,4");
}

TEST_CASE("ModeSpec") {
  CHECK(bia::ModeSpec({3, 2}).users() == 2);
  CHECK_THROWS_AS(bia::ModeSpec({}), ConfigError);
  CHECK_THROWS_AS(bia::ModeSpec({3, 0}), ConfigError);
}
