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

#include "run_config.hpp"

#include <charconv>
#include <cstdlib>
#include <string>
#include <stdexcept>

#include "json.hpp"

#include "bia/grouping.hpp"

namespace bia::cli {

namespace {

std::uint64_t to_u64(std::string text, const char* what) {
  std::erase(text, ' ');
  std::uint64_t v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end || text.empty())
    throw ConfigError(std::string("bad ") + what + ": '" + text + "'");
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) return parts;
    start = pos + 1;
  }
}

}  // namespace

std::uint64_t default_seed() {
  const char* env = std::getenv("BIA_SEED");
  return env && *env ? to_u64(env, "BIA_SEED") : 1;
}

void apply_json(RunConfig& c, const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config file: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config file: expected a JSON object");
  try {
    if (j.contains("command")) c.command = j["command"].get<std::string>();
    if (j.contains("modes")) c.modes = j["modes"].get<std::vector<int>>();
    if (j.contains("groups")) c.groups = j["groups"].get<std::string>();
    if (j.contains("mg")) c.mg = j["mg"].get<std::vector<int>>();
    if (j.contains("used")) c.used = j["used"].get<std::vector<int>>();
    if (j.contains("L")) c.budget = j["L"].is_string() ? j["L"].get<std::string>() : j["L"].dump();
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("out")) c.out = j["out"].get<std::string>();
    if (j.contains("noise")) c.noise = j["noise"].get<double>();
    if (j.contains("coherence")) c.coherence = j["coherence"].get<std::size_t>();
    if (j.contains("flat")) c.flat = j["flat"].get<bool>();
    if (j.contains("reduction")) c.reduction = j["reduction"].get<bool>();
    if (j.contains("kg_min2")) c.require_grouping = j["kg_min2"].get<bool>();
    if (j.contains("verify")) c.verify = j["verify"].get<bool>();
    if (j.contains("seeds")) c.seeds = j["seeds"].get<std::size_t>();
    if (j.contains("dump_channels")) c.dump_channels = j["dump_channels"].get<std::string>();
    if (j.contains("band")) c.band = j["band"].get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config file: ") + e.what());
  }
}

std::vector<Budget> parse_budgets(const std::string& text) {
  if (text.empty()) return {Budget{}};
  std::vector<Budget> out;
  for (const auto& item : split(text, ',')) {
    if (item == "inf") {
      out.push_back(std::nullopt);
      continue;
    }
    auto parts = split(item, ':');
    if (parts.size() == 1) {
      out.push_back(to_u64(item, "budget"));
      continue;
    }
    if (parts.size() > 3) throw ConfigError("bad budget range: '" + item + "'");
    auto lo = to_u64(parts[0], "budget"), hi = to_u64(parts[1], "budget");
    auto step = parts.size() == 3 ? to_u64(parts[2], "budget step") : 1;
    if (step == 0 || lo > hi) throw ConfigError("bad budget range: '" + item + "'");
    for (auto L = lo; L <= hi; L += step) out.push_back(L);
  }
  return out;
}

std::vector<std::vector<int>> parse_mode_groups(const std::string& text) {
  std::vector<std::vector<int>> groups;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
  };
  skip();
  while (pos < text.size()) {
    if (text[pos] != '[') throw ConfigError("bad groups: '" + text + "'");
    auto close = text.find(']', pos);
    if (close == std::string::npos) throw ConfigError("bad groups: '" + text + "'");
    std::vector<int> group;
    for (const auto& v : split(text.substr(pos + 1, close - pos - 1), ','))
      group.push_back(static_cast<int>(to_u64(v, "group entry")));
    groups.push_back(std::move(group));
    pos = close + 1;
    skip();
  }
  if (groups.empty()) throw ConfigError("bad groups: '" + text + "'");
  return groups;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> parse_band(const std::string& text) {
  if (text.empty()) return std::nullopt;
  auto parts = split(text, ':');
  if (parts.size() != 2) throw ConfigError("bad band: '" + text + "'");
  return std::pair{to_u64(parts[0], "band"), to_u64(parts[1], "band")};
}

}  // namespace bia::cli
