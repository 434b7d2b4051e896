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

#include "commands.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <ostream>

#include "bia/channel.hpp"
#include "bia/dof.hpp"
#include "bia/optimizer.hpp"
#include "bia/pattern.hpp"
#include "bia/report.hpp"
#include "bia/signal.hpp"

namespace bia::cli {

namespace {

constexpr std::uint64_t kSymbolSeedOffset = 1000003;
constexpr std::uint64_t kNoiseSeedOffset = 2000003;
constexpr double kDecodeTolerance = 1e-9;

Budget single_budget(const RunConfig& c) {
  auto budgets = parse_budgets(c.budget);
  if (budgets.size() != 1) throw ConfigError("expected a single budget for --L, got '" + c.budget + "'");
  return budgets.front();
}

void check_fits(const RunConfig& c, const GroupingConfig& config) {
  auto budget = single_budget(c);
  auto length = grouped_length(config);
  if (budget && length > *budget)
    throw Infeasible("supersymbol length " + std::to_string(length) + " exceeds budget " +
                     std::to_string(*budget));
}

bool emit(const RunConfig& c, std::ostream& out, std::ostream& err, const std::string& text) {
  if (c.out.empty()) {
    out << text;
    return true;
  }
  std::ofstream file(c.out);
  file << text;
  if (!file) {
    err << "error: cannot write " << c.out << '\n';
    return false;
  }
  return true;
}

std::string fixed6(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f",
                static_cast<double>(r.numerator()) / static_cast<double>(r.denominator()));
  return buf;
}

std::vector<std::uint64_t> seed_list(const RunConfig& c) {
  std::vector<std::uint64_t> seeds(std::max<std::size_t>(c.seeds, 1));
  std::iota(seeds.begin(), seeds.end(), c.seed);
  return seeds;
}

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    err << "invalid config: " << e.what() << '\n';
    return kInvalidConfig;
  } catch (const Infeasible& e) {
    err << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const std::overflow_error& e) {
    err << "invalid config: " << e.what() << '\n';
    return kInvalidConfig;
  }
}

}  // namespace

GroupingConfig resolve_config(const RunConfig& c, Exec exec) {
  if (c.modes.empty()) throw ConfigError("no modes given (--modes)");
  if (c.flat || c.groups.empty()) {
    if (!c.flat && !c.mg.empty()) throw ConfigError("--mg given without --groups");
    return GroupingConfig::validate({c.modes, c.used, {}, {}});
  }
  if (c.groups == "auto") {
    SearchSpace space{c.modes, single_budget(c), {}, c.reduction, c.require_grouping};
    auto best = optimize(space, exec).grouped;
    if (!best) throw Infeasible("no configuration fits budget " + format_budget(space.budget));
    return best->config;
  }
  return GroupingConfig::from_mode_groups(c.modes, parse_mode_groups(c.groups), c.mg, c.used);
}

int cmd_pattern(const RunConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto config = resolve_config(c);
    check_fits(c, config);
    return emit(c, out, err, render_pattern_table(grouped_pattern(config), config)) ? kOk : kIoError;
  });
}

int cmd_dof(const RunConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto config = resolve_config(c);
    check_fits(c, config);
    auto report = dof_report(config);
    std::string text = format_fraction(report.sum) + " (" + fixed6(report.sum) + "), length " +
                       std::to_string(report.length) + '\n';
    text += "# config " + config.canonical() + '\n';
    for (std::size_t u = 0; u < config.users(); ++u)
      text += config.label(u) + ' ' + format_fraction(report.per_user[u]) + '\n';
    return emit(c, out, err, text) ? kOk : kIoError;
  });
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto config = resolve_config(c);
    check_fits(c, config);
    auto pattern = grouped_pattern(config);
    auto placement = build_streams(pattern, config);
    auto coherence = c.coherence.value_or(pattern.length());
    auto channels = draw_channels(config, coherence, c.seed);
    auto report = alignment_report(placement, pattern, channels, config);

    auto truth = random_symbols(placement, c.seed + kSymbolSeedOffset);
    auto received = assemble_received(placement, pattern, channels, truth, c.noise, c.seed + kNoiseSeedOffset);
    auto decoded = decode(placement, pattern, channels, received);
    double error = relative_error(decoded.symbols, truth);

    std::string text = render_alignment_csv(report, config, c.seed, coherence);
    char buf[96];
    std::snprintf(buf, sizeof buf, "# decode relative_error=%.3e unrecoverable=%zu noise=%g\n", error,
                  decoded.unrecoverable.size(), c.noise);
    text += buf;
    if (!emit(c, out, err, text)) return kIoError;

    if (!c.dump_channels.empty()) {
      std::ofstream dump(c.dump_channels);
      dump << render_channel_dump(channels, config);
      if (!dump) {
        err << "error: cannot write " << c.dump_channels << '\n';
        return kIoError;
      }
    }

    bool ok = report.all_match();
    if (!ok) err << "mismatch: measured ranks differ from the predictions\n";
    if (c.noise == 0.0 && (!decoded.complete() || error > kDecodeTolerance)) {
      err << "mismatch: noiseless decode failed (relative error " << error << ")\n";
      ok = false;
    }
    return ok ? kOk : kMismatch;
  });
}

int cmd_sweep(const RunConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (c.modes.empty()) throw ConfigError("no modes given (--modes)");
    SearchSpace space{c.modes, std::nullopt, {}, c.reduction, c.require_grouping};
    space.check();
    auto budgets = parse_budgets(c.budget.empty() ? "1:100" : c.budget);
    auto result = sweep(space, budgets);

    bool verified = true;
    if (c.verify) {
      auto seeds = seed_list(c);
      auto vr = verify_sweep(result, seeds);
      for (const auto& e : vr.entries)
        if (!e.verified) err << "unverified: " << e.config << ": " << e.reason << '\n';
      verified = vr.all_verified();
    }
    if (!emit(c, out, err, render_sweep_csv(result, space))) return kIoError;

    auto band = analyse_band(result, parse_band(c.band));
    if (band.advantage)
      err << "info: grouping ahead on L in [" << band.advantage->first << ','
          << band.advantage->second << "] (" << band.advantage_budgets.size() << " budgets)\n";
    else
      err << "info: grouping never ahead in this sweep\n";
    if (band.flat_tail)
      err << "info: grouped optimum is conventional from L=" << format_budget(band.flat_from)
          << (band.equal_after_flat ? " (strategies tie)" : "") << '\n';
    for (const auto& note : band.notes) err << "info: " << note << '\n';

    bool any = false;
    for (const auto& row : result.rows) any = any || row.grouped.has_value();
    if (!verified) return kMismatch;
    return any ? kOk : kInfeasible;
  });
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.command == "pattern") return cmd_pattern(c, out, err);
  if (c.command == "verify") return cmd_verify(c, out, err);
  if (c.command == "dof") return cmd_dof(c, out, err);
  if (c.command == "sweep") return cmd_sweep(c, out, err);
  err << "unknown command '" << c.command << "'\n";
  return kInvalidConfig;
}

}  // namespace bia::cli
