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

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

struct Flags {
  std::string config_path, modes, groups, mg, used, budget, out, dump_channels, band;
  std::uint64_t seed = 0;
  double noise = 0.0;
  std::size_t coherence = 0, seeds = 0;
  bool flat = false, no_reduction = false, kg_min2 = false, verify = false;
};

std::vector<int> int_list(const std::string& text) {
  std::vector<int> values;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) values.push_back(std::stoi(item));
  return values;
}

void add_options(CLI::App* sub, Flags& f) {
  sub->add_option("--config", f.config_path, "JSON file with the same keys; flags override it");
  sub->add_option("--modes", f.modes, "equipped modes per user, e.g. 6,6,4,4");
  sub->add_option("--groups", f.groups, "\"[6,4],[6,4]\" or auto");
  sub->add_option("--mg", f.mg, "group mode count per group, e.g. 2,2");
  sub->add_option("--used", f.used, "used modes per user (mode reduction)");
  sub->add_option("--L", f.budget, "budget: N, a:b[:step], inf, or a comma list");
  sub->add_option("--seed", f.seed, "channel seed (default $BIA_SEED or 1)");
  sub->add_option("--seeds", f.seeds, "number of seeds for sweep --verify");
  sub->add_option("--coherence", f.coherence, "coherence block length in slots");
  sub->add_option("--noise", f.noise, "noise standard deviation for the decode round trip");
  sub->add_option("--out", f.out, "output file (default stdout)");
  sub->add_option("--dump-channels", f.dump_channels, "write drawn channel gains to this file");
  sub->add_option("--expect-band", f.band, "reference band lo:hi for sweep diagnostics");
  sub->add_flag("--flat", f.flat, "conventional scheme over all users");
  sub->add_flag("--no-reduction", f.no_reduction, "use every equipped mode");
  sub->add_flag("--kg-min2", f.kg_min2, "grouped strategy requires at least two groups");
  sub->add_flag("--verify", f.verify, "check each sweep winner numerically");
}

bia::cli::RunConfig build(const CLI::App& sub, const Flags& f) {
  bia::cli::RunConfig c;
  c.command = sub.get_name();
  c.seed = bia::cli::default_seed();
  if (!f.config_path.empty()) {
    std::ifstream in(f.config_path);
    if (!in) throw bia::ConfigError("cannot read config file " + f.config_path);
    std::stringstream text;
    text << in.rdbuf();
    bia::cli::apply_json(c, text.str());
    c.command = sub.get_name();
  }
  auto given = [&](const char* name) { return sub.count(name) > 0; };
  if (given("--modes")) c.modes = int_list(f.modes);
  if (given("--groups")) c.groups = f.groups;
  if (given("--mg")) c.mg = int_list(f.mg);
  if (given("--used")) c.used = int_list(f.used);
  if (given("--L")) c.budget = f.budget;
  if (given("--seed")) c.seed = f.seed;
  if (given("--seeds")) c.seeds = f.seeds;
  if (given("--coherence")) c.coherence = f.coherence;
  if (given("--noise")) c.noise = f.noise;
  if (given("--out")) c.out = f.out;
  if (given("--dump-channels")) c.dump_channels = f.dump_channels;
  if (given("--expect-band")) c.band = f.band;
  if (given("--flat")) c.flat = true;
  if (given("--no-reduction")) c.reduction = false;
  if (given("--kg-min2")) c.require_grouping = true;
  if (given("--verify")) c.verify = true;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Blind interference alignment with user grouping"};
  app.require_subcommand(1);
  Flags flags;
  for (const char* name : {"pattern", "verify", "dof", "sweep"}) {
    auto* sub = app.add_subcommand(name);
    add_options(sub, flags);
  }
  app.get_subcommand("pattern")->description("print the preset mode pattern");
  app.get_subcommand("verify")->description("measure alignment ranks and decode on random channels");
  app.get_subcommand("dof")->description("sum and per-user DoF of a configuration");
  app.get_subcommand("sweep")->description("best conventional and grouped DoF per length budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return bia::cli::kInvalidConfig;
  }

  try {
    auto config = build(*app.get_subcommands().front(), flags);
    return bia::cli::run(config, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "invalid config: " << e.what() << '\n';
    return bia::cli::kInvalidConfig;
  }
}
