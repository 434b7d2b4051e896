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

#include "bia/grouping.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bia {

namespace {

[[noreturn]] void fail(const std::string& invariant) { throw ConfigError(invariant); }

std::string join(std::span<const int> values) {
  std::ostringstream out;
  for (std::size_t n = 0; n < values.size(); ++n) out << (n ? "," : "") << values[n];
  return out.str();
}

}  // namespace

ModeSpec::ModeSpec(std::vector<int> mode_counts) : counts_(std::move(mode_counts)) {
  if (counts_.empty()) fail("user count K >= 1");
  for (int m : counts_)
    if (m < 2) fail("every user needs M_k >= 2 preset modes (got " + std::to_string(m) + ")");
}

GroupingConfig GroupingConfig::validate(const GroupingRequest& request) {
  const ModeSpec spec(request.equipped);
  const std::size_t K = spec.users();

  GroupingConfig cfg;
  cfg.equipped_ = request.equipped;
  cfg.used_ = request.used.empty() ? request.equipped : request.used;
  if (cfg.used_.size() != K) fail("used-mode list has one entry per user");
  for (std::size_t u = 0; u < K; ++u) {
    if (cfg.used_[u] < 2) fail("used modes M' >= 2 for every user");
    if (cfg.used_[u] > cfg.equipped_[u]) fail("used modes M' <= equipped modes for every user");
  }

  std::vector<std::vector<std::size_t>> groups = request.groups;
  if (groups.empty()) {
    groups.emplace_back(K);
    std::iota(groups.front().begin(), groups.front().end(), std::size_t{0});
  }
  const std::size_t KG = groups.size();
  if (K % KG != 0) fail("K divisible by K_G");
  const std::size_t KE = K / KG;

  std::vector<int> seen(K, 0);
  for (const auto& g : groups) {
    if (g.size() != KE) fail("every group has exactly K_E = K / K_G users");
    for (std::size_t u : g) {
      if (u >= K) fail("group member refers to an existing user");
      if (seen[u]++) fail("groups partition the users (user " + std::to_string(u + 1) + " repeated)");
    }
  }

  std::vector<int> mg = request.group_mode_counts;
  if (mg.empty() && KG == 1) mg = {1};
  if (mg.size() != KG) fail("one mode-group count M_G per group");

  if (KG == 1) {
    if (mg[0] != 1) fail("a single group requires M_G = 1 (conventional scheme)");
    cfg.members_ = groups.front();
    cfg.group_counts_ = {1};
    for (std::size_t u : cfg.members_) cfg.element_counts_.push_back(cfg.used_[u]);
    return cfg;
  }

  for (int m : mg)
    if (m < 2) fail("M_G >= 2 for every group when K_G >= 2");

  for (auto& g : groups) {
    std::stable_sort(g.begin(), g.end(), [&](std::size_t a, std::size_t b) {
      return cfg.used_[a] != cfg.used_[b] ? cfg.used_[a] > cfg.used_[b] : a < b;
    });
  }

  cfg.element_counts_.assign(KE, 0);
  for (std::size_t i = 0; i < KG; ++i) {
    for (std::size_t k = 0; k < KE; ++k) {
      const int used = cfg.used_[groups[i][k]];
      if (used % mg[i] != 0)
        fail("M_G of group " + std::to_string(i + 1) + " divides the used modes of its members");
      const int me = used / mg[i];
      if (me < 2) fail("element counts M_E >= 2 when K_G >= 2");
      if (i == 0) {
        cfg.element_counts_[k] = me;
      } else if (cfg.element_counts_[k] != me) {
        fail("element count M_E at position " + std::to_string(k + 1) +
             " identical across groups");
      }
    }
  }
  for (const auto& g : groups) cfg.members_.insert(cfg.members_.end(), g.begin(), g.end());
  cfg.group_counts_ = std::move(mg);
  return cfg;
}

GroupingConfig GroupingConfig::flat(std::vector<int> modes) {
  GroupingRequest request;
  request.equipped = std::move(modes);
  return validate(request);
}

GroupingConfig GroupingConfig::from_mode_groups(std::vector<int> equipped,
                                                const std::vector<std::vector<int>>& mode_groups,
                                                std::vector<int> group_mode_counts,
                                                std::vector<int> used) {
  GroupingRequest request;
  std::vector<bool> taken(equipped.size(), false);
  for (const auto& values : mode_groups) {
    auto& group = request.groups.emplace_back();
    for (int value : values) {
      std::size_t u = 0;
      while (u < equipped.size() && (taken[u] || equipped[u] != value)) ++u;
      if (u == equipped.size())
        fail("group entry " + std::to_string(value) + " matches an unassigned user");
      taken[u] = true;
      group.push_back(u);
    }
  }
  request.equipped = std::move(equipped);
  request.used = std::move(used);
  request.group_mode_counts = std::move(group_mode_counts);
  return validate(request);
}

std::string GroupingConfig::label(std::size_t u) const {
  const UserRef r = ref(u);
  return "[" + std::to_string(r.k + 1) + "," + std::to_string(r.i + 1) + "]";
}

std::string GroupingConfig::canonical() const {
  std::ostringstream out;
  out << "KG=" << num_groups();
  std::vector<int> used_order;
  for (std::size_t i = 0; i < num_groups(); ++i) {
    std::vector<int> eq;
    for (std::size_t k = 0; k < group_size(); ++k) {
      eq.push_back(equipped_modes(index({k, i})));
      used_order.push_back(used_modes(index({k, i})));
    }
    out << ";G" << i + 1 << "=[" << join(eq) << "]/MG" << group_counts_[i];
  }
  out << ";used=" << join(used_order);
  return out.str();
}

}  // namespace bia
