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
#include <string>
#include <utility>
#include <vector>

#include "bia/optimizer.hpp"

namespace bia::cli {

/// Everything one invocation needs. Loaded from a JSON file (keys as below),
/// then overridden by whichever flags were given on the command line.
struct RunConfig {
  std::string command;
  std::vector<int> modes;
  std::string groups;  // "" flat, "auto" optimizer pick, or "[6,4],[6,4]"
  std::vector<int> mg;
  std::vector<int> used;
  std::string budget;  // "15", "5:100", "5:100:5", "10,15,inf", "inf"
  std::uint64_t seed = 1;
  std::string out;  // "" writes to stdout
  double noise = 0.0;
  std::optional<std::size_t> coherence;
  bool flat = false;
  bool reduction = true;
  bool require_grouping = false;
  bool verify = false;
  std::size_t seeds = 3;
  std::string dump_channels;
  std::string band;  // reference band "lo:hi" for sweep diagnostics
};

/// Default seed: $BIA_SEED when set, otherwise 1.
std::uint64_t default_seed();

/// Reads a JSON object into `config`; keys that are absent keep their value.
void apply_json(RunConfig& config, const std::string& json_text);

std::vector<Budget> parse_budgets(const std::string& text);

/// "[6,4],[6,4]" -> {{6,4},{6,4}}
std::vector<std::vector<int>> parse_mode_groups(const std::string& text);

std::optional<std::pair<std::uint64_t, std::uint64_t>> parse_band(const std::string& text);

}  // namespace bia::cli
