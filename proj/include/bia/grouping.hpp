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

#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bia {

/// Raised whenever a mode list or grouping violates a construction invariant.
/// The message names the violated invariant.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Preset-mode counts M_1..M_K, one per user. Every user needs at least two
/// modes, otherwise the switching pattern degenerates.
class ModeSpec {
 public:
  explicit ModeSpec(std::vector<int> mode_counts);

  std::size_t users() const { return counts_.size(); }
  std::span<const int> counts() const { return counts_; }
  int operator[](std::size_t k) const { return counts_[k]; }

 private:
  std::vector<int> counts_;
};

/// Unvalidated grouping description, as it arrives from flags or files.
/// User indices are 0-based positions in `equipped`.
struct GroupingRequest {
  std::vector<int> equipped;
  std::vector<int> used;                         // empty: use every equipped mode
  std::vector<std::vector<std::size_t>> groups;  // empty: one group with all users
  std::vector<int> group_mode_counts;            // empty with one group: {1}
};

/// Position of a user inside a grouping: element position k within group i
/// (both 0-based; rendered 1-based as "[k,i]").
struct UserRef {
  std::size_t k = 0;
  std::size_t i = 0;
};

/// A validated two-level grouping. Users are addressed either by UserRef or by
/// the flat index i * K_E + k, which is the column order used everywhere else
/// (patterns, placements, channels, reports).
///
/// With one group the config is the conventional flat scheme: M_G = {1} and the
/// element counts are the used-mode counts in original user order. With two or
/// more groups, members of each group are ordered by descending used-mode count
/// (ties by original index) and the element count at position k must be the
/// same in every group.
class GroupingConfig {
 public:
  static GroupingConfig validate(const GroupingRequest& request);

  /// Conventional flat scheme using every equipped mode.
  static GroupingConfig flat(std::vector<int> modes);

  /// Groups given by equipped mode values (e.g. {{6,4},{6,4}}); each value is
  /// bound to the first not-yet-assigned user with that many equipped modes.
  static GroupingConfig from_mode_groups(std::vector<int> equipped,
                                         const std::vector<std::vector<int>>& mode_groups,
                                         std::vector<int> group_mode_counts,
                                         std::vector<int> used = {});

  std::size_t users() const { return equipped_.size(); }
  std::size_t num_groups() const { return group_counts_.size(); }
  std::size_t group_size() const { return element_counts_.size(); }
  bool is_flat() const { return num_groups() == 1; }

  std::span<const int> group_mode_counts() const { return group_counts_; }
  std::span<const int> element_counts() const { return element_counts_; }

  std::size_t index(UserRef ref) const { return ref.i * group_size() + ref.k; }
  UserRef ref(std::size_t index) const { return {index % group_size(), index / group_size()}; }

  /// Original user index of the member at flat index u.
  std::size_t member(std::size_t u) const { return members_[u]; }
  int used_modes(std::size_t u) const { return used_[members_[u]]; }
  int equipped_modes(std::size_t u) const { return equipped_[members_[u]]; }

  std::span<const int> equipped_by_user() const { return equipped_; }
  std::span<const int> used_by_user() const { return used_; }

  /// "[k,i]" with 1-based indices.
  std::string label(std::size_t u) const;

  /// e.g. KG=2;G1=[6,4]/MG2;G2=[6,4]/MG2;used=6,4,6,4
  std::string canonical() const;

  bool operator==(const GroupingConfig&) const = default;

 private:
  GroupingConfig() = default;

  std::vector<int> equipped_;
  std::vector<int> used_;
  std::vector<std::size_t> members_;  // flat index -> original user
  std::vector<int> group_counts_;
  std::vector<int> element_counts_;
};

}  // namespace bia
