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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bia/dof.hpp"
#include "bia/exec.hpp"
#include "bia/grouping.hpp"

namespace bia {

/// Length budget in slots; nullopt means unbounded.
using Budget = std::optional<std::uint64_t>;

struct SearchSpace {
  std::vector<int> equipped;
  Budget budget;
  std::vector<std::size_t> group_counts;  // allowed K_G >= 2; empty: every divisor of K
  bool mode_reduction = true;             // allow 2 <= M' <= equipped
  bool require_grouping = false;          // grouped strategy restricted to K_G >= 2

  /// Throws ConfigError unless equipped modes are >= 2 and budget >= 1.
  void check() const;
};

struct Candidate {
  GroupingConfig config;
  Rational dof;
  std::uint64_t length = 0;
};

/// Total order used for every argmax: larger DoF, then shorter length, then
/// fewer groups, then lexicographically smaller canonical string.
bool ranks_before(const Candidate& a, const Candidate& b);

/// Every valid grouping up to relabeling of groups and of users with equal
/// equipped counts. Conventional (K_G = 1) configs come first; K_G = 1 is
/// always included, `group_counts` only filters K_G >= 2.
std::vector<GroupingConfig> enumerate_configs(const SearchSpace& space);

std::vector<Candidate> evaluate(std::span<const GroupingConfig> configs, Exec exec = Exec::parallel);

/// Best candidate within the budget; nullopt when nothing fits.
std::optional<Candidate> best_within(std::span<const Candidate> candidates, Budget budget,
                                     bool grouped_only, bool flat_only, Exec exec = Exec::parallel);

struct StrategyBest {
  std::optional<Candidate> conventional;  // K_G = 1 only
  std::optional<Candidate> grouped;       // whole space (K_G >= 2 only if require_grouping)
};

StrategyBest optimize(const SearchSpace& space, Exec exec = Exec::parallel);

struct SweepRow {
  Budget budget;
  std::optional<Candidate> conventional;
  std::optional<Candidate> grouped;
  std::optional<bool> verified;
};

struct SweepResult {
  std::vector<SweepRow> rows;
};

/// One optimization per budget over a single enumeration. Throws
/// std::logic_error if either strategy's DoF decreases as the budget grows.
SweepResult sweep(const SearchSpace& space, std::span<const Budget> budgets,
                  Exec exec = Exec::parallel);

struct VerificationEntry {
  std::string config;
  bool verified = false;
  std::string reason;
};

struct VerificationReport {
  std::vector<VerificationEntry> entries;
  bool all_verified() const;
};

/// Builds the plan for a config and checks measured ranks against the
/// predictions on every seed with a coherence block covering the supersymbol.
VerificationEntry verify_config(const GroupingConfig& config, std::span<const std::uint64_t> seeds,
                                Exec exec = Exec::parallel);

/// Same, starting from an unvalidated request; a request that fails
/// validation fails verification with the violated invariant as reason.
VerificationEntry verify_request(const GroupingRequest& request,
                                 std::span<const std::uint64_t> seeds, Exec exec = Exec::parallel);

/// Verifies each distinct winning config and fills SweepRow::verified.
VerificationReport verify_sweep(SweepResult& result, std::span<const std::uint64_t> seeds,
                                Exec exec = Exec::parallel);

/// Where grouping beats the conventional scheme along a sweep.
struct BandAnalysis {
  std::optional<std::pair<std::uint64_t, std::uint64_t>> advantage;  // min/max budget, grouped > conventional
  std::vector<std::uint64_t> advantage_budgets;
  bool flat_tail = false;         // the last rows' grouped winners are K_G = 1
  Budget flat_from;               // first budget of that tail (nullopt: only the unbounded row)
  bool equal_after_flat = true;   // both strategies tie throughout the tail
  std::vector<std::string> notes;          // differences against the reference band
};

BandAnalysis analyse_band(const SweepResult& result,
                          std::optional<std::pair<std::uint64_t, std::uint64_t>> reference = {});

}  // namespace bia
