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

// Serial reference vs OpenMP kernels on the same inputs. Prints wall time per
// kernel and whether both paths produced identical results.

#include <chrono>
#include <cstdio>
#include <numeric>
#include <vector>

#include <omp.h>

#include "bia/optimizer.hpp"
#include "bia/pattern.hpp"
#include "bia/signal.hpp"

namespace {

template <class F>
double seconds(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void line(const char* name, double serial, double parallel, bool same) {
  std::printf("%-22s serial %9.4f s  parallel %9.4f s  speedup %5.2fx  %s\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0, same ? "identical" : "DIFFERENT");
}

bool same_best(const std::optional<bia::Candidate>& a, const std::optional<bia::Candidate>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || (a->config == b->config && a->dof == b->dof && a->length == b->length);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());

  bia::SearchSpace space{{6, 6, 6, 6, 4, 4, 4, 4}, std::nullopt, {}, true, false};
  std::vector<bia::GroupingConfig> configs;
  double t_enum = seconds([&] { configs = bia::enumerate_configs(space); });
  std::printf("enumerated %zu configs in %.4f s\n", configs.size(), t_enum);

  std::vector<bia::Candidate> cs, cp;
  double ts = seconds([&] { cs = bia::evaluate(configs, bia::Exec::serial); });
  double tp = seconds([&] { cp = bia::evaluate(configs, bia::Exec::parallel); });
  bool same = cs.size() == cp.size();
  for (std::size_t n = 0; same && n < cs.size(); ++n) same = cs[n].dof == cp[n].dof && cs[n].length == cp[n].length;
  line("evaluate", ts, tp, same);

  std::vector<bia::Budget> budgets;
  for (std::uint64_t L = 1; L <= 400; ++L) budgets.push_back(L);
  budgets.push_back(std::nullopt);
  bia::SweepResult rs, rp;
  ts = seconds([&] { rs = bia::sweep(space, budgets, bia::Exec::serial); });
  tp = seconds([&] { rp = bia::sweep(space, budgets, bia::Exec::parallel); });
  same = rs.rows.size() == rp.rows.size();
  for (std::size_t n = 0; same && n < rs.rows.size(); ++n)
    same = same_best(rs.rows[n].conventional, rp.rows[n].conventional) &&
           same_best(rs.rows[n].grouped, rp.rows[n].grouped);
  line("sweep", ts, tp, same);

  auto config = bia::GroupingConfig::from_mode_groups({6, 6, 4, 4}, {{6, 4}, {6, 4}}, {2, 2});
  auto pattern = bia::grouped_pattern(config);
  std::vector<std::uint64_t> seeds(16);
  std::iota(seeds.begin(), seeds.end(), 1);
  std::vector<bia::AlignmentReport> as, ap;
  ts = seconds([&] { as = bia::seed_reports(config, pattern.length(), seeds, bia::Exec::serial); });
  tp = seconds([&] { ap = bia::seed_reports(config, pattern.length(), seeds, bia::Exec::parallel); });
  line("seed_reports", ts, tp, as == ap);

  auto flat = bia::GroupingConfig::flat({6, 6, 4, 4});
  auto flat_length = bia::grouped_pattern(flat).length();
  std::vector<std::uint64_t> few(seeds.begin(), seeds.begin() + 4);
  ts = seconds([&] { as = bia::seed_reports(flat, flat_length, few, bia::Exec::serial); });
  tp = seconds([&] { ap = bia::seed_reports(flat, flat_length, few, bia::Exec::parallel); });
  line("seed_reports (L=465)", ts, tp, as == ap);

  auto placement = bia::build_streams(pattern, config);
  auto channels = bia::draw_channels(config, pattern.length(), 7);
  bia::AlignmentReport a1, a2;
  ts = seconds([&] { a1 = bia::alignment_report(placement, pattern, channels, config, bia::Exec::serial); });
  tp = seconds([&] { a2 = bia::alignment_report(placement, pattern, channels, config, bia::Exec::parallel); });
  line("alignment_report", ts, tp, a1 == a2);

  auto symbols = bia::random_symbols(placement, 11);
  auto received = bia::assemble_received(placement, pattern, channels, symbols);
  bia::DecodeResult d1, d2;
  ts = seconds([&] { d1 = bia::decode(placement, pattern, channels, received, bia::Exec::serial); });
  tp = seconds([&] { d2 = bia::decode(placement, pattern, channels, received, bia::Exec::parallel); });
  line("decode", ts, tp, bia::relative_error(d1.symbols, d2.symbols) == 0.0);
  return 0;
}
