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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bia/grouping.hpp"

namespace bia {

/// 1-based preset modes, one entry per slot.
using ModeSequence = std::vector<int>;

/// Flat switching pattern for users with the given mode counts.
///
/// Slots are laid out as a first block enumerating every tuple (t_1..t_K),
/// t_k in 1..M_k-1, in mixed-radix order with the last user's digit fastest,
/// followed by one segment per user k in which k holds mode M_k while the
/// other users enumerate their digits in the same order. User k therefore
/// reaches mode M_k only inside its own segment.
std::vector<ModeSequence> base_pattern(std::span<const int> element_counts);

/// All pairs (a_i, b_j), ordered b-major: position j*|a| + i holds (a_i, b_j).
std::vector<std::pair<int, int>> sequence_cartesian_product(std::span<const int> a,
                                                            std::span<const int> b);

/// prod(M_k - 1) + sum_k prod_{q != k}(M_q - 1). Throws std::overflow_error
/// past 2^64.
std::uint64_t flat_length(std::span<const int> modes);

/// flat_length(M_E) * flat_length(M_G); a single group contributes a factor 1.
std::uint64_t grouped_length(const GroupingConfig& config);

/// Slot sets (0-based, ascending) of every stream that user `user` sends in
/// the flat pattern of `counts`. Stream order follows the mixed-radix order of
/// the other users' digits. Each set has counts[user] slots.
std::vector<std::vector<std::size_t>> flat_stream_slots(std::span<const int> counts,
                                                        std::size_t user);

struct CompositeMode {
  int element = 1;   // m1
  int group = 1;     // m2
  int physical = 1;  // (m2 - 1) * M_E_k + m1

  bool operator==(const CompositeMode&) const = default;
};

/// Per-user composite switching sequences of a grouped supersymbol.
/// Users are indexed by GroupingConfig::index.
struct PresetPattern {
  std::size_t element_length = 0;  // L_1
  std::size_t group_length = 0;    // L_2
  std::vector<std::vector<CompositeMode>> users;

  std::size_t length() const { return element_length * group_length; }
  const CompositeMode& at(std::size_t user, std::size_t slot) const { return users[user][slot]; }
  ModeSequence physical(std::size_t user) const;
};

/// m1 pattern of position k times m2 pattern of group i for every user [k,i].
PresetPattern grouped_pattern(const GroupingConfig& config);

/// Plain-text table, one row per slot and one column per user; entries are
/// "m1.m2/phys". Starts with a versioned comment line.
std::string render_pattern_table(const PresetPattern& pattern, const GroupingConfig& config);

}  // namespace bia
