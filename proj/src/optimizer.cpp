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

#include "bia/optimizer.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "bia/pattern.hpp"
#include "bia/signal.hpp"

namespace bia {

namespace {

// Calls f(values) for every non-increasing sequence of `length` entries in [lo, hi].
template <class F>
void for_each_nonincreasing(int lo, int hi, std::size_t length, F&& f) {
  std::vector<int> values;
  auto rec = [&](auto&& self, int cap) -> void {
    if (values.size() == length) {
      f(values);
      return;
    }
    for (int v = cap; v >= lo; --v) {
      values.push_back(v);
      self(self, v);
      values.pop_back();
    }
  };
  rec(rec, hi);
}

void enumerate_flat(const SearchSpace& space, std::vector<GroupingConfig>& out) {
  const auto& eq = space.equipped;
  std::map<int, std::vector<std::size_t>, std::greater<>> classes;
  for (std::size_t u = 0; u < eq.size(); ++u) classes[eq[u]].push_back(u);

  std::vector<std::pair<const std::vector<std::size_t>*, std::vector<std::vector<int>>>> options;
  for (const auto& [value, members] : classes) {
    auto& opt = options.emplace_back(&members, std::vector<std::vector<int>>{}).second;
    const int lo = space.mode_reduction ? 2 : value;
    for_each_nonincreasing(lo, value, members.size(), [&](const std::vector<int>& v) { opt.push_back(v); });
  }

  std::vector<int> used(eq.size(), 0);
  auto rec = [&](auto&& self, std::size_t c) -> void {
    if (c == options.size()) {
      GroupingRequest request;
      request.equipped = eq;
      request.used = used;
      out.push_back(GroupingConfig::validate(request));
      return;
    }
    const auto& members = *options[c].first;
    for (const auto& choice : options[c].second) {
      for (std::size_t n = 0; n < members.size(); ++n) used[members[n]] = choice[n];
      self(self, c + 1);
    }
  };
  rec(rec, 0);
}

// (equipped, used) per position, one entry per group, plus M_G.
using GroupKey = std::pair<std::vector<std::pair<int, int>>, int>;

void enumerate_grouped(const SearchSpace& space, std::size_t KG, std::vector<GroupingConfig>& out) {
  const auto& eq = space.equipped;
  const std::size_t K = eq.size();
  const std::size_t KE = K / KG;
  const int max_modes = *std::max_element(eq.begin(), eq.end());

  std::vector<int> sorted_eq = eq;
  std::sort(sorted_eq.begin(), sorted_eq.end(), std::greater<>());
  std::set<std::vector<GroupKey>> seen;

  for_each_nonincreasing(2, max_modes / 2, KE, [&](const std::vector<int>& me) {
    for_each_nonincreasing(2, max_modes / me.front(), KG, [&](const std::vector<int>& mg) {
      std::vector<int> need;
      for (int g : mg)
        for (int e : me) need.push_back(g * e);
      std::vector<int> sorted_need = need;
      std::sort(sorted_need.begin(), sorted_need.end(), std::greater<>());
      for (std::size_t n = 0; n < K; ++n) {
        if (sorted_need[n] > sorted_eq[n]) return;
        if (!space.mode_reduction && sorted_need[n] != sorted_eq[n]) return;
      }

      std::vector<std::size_t> assign(K);
      std::vector<bool> taken(K, false);
      auto rec = [&](auto&& self, std::size_t slot) -> void {
        if (slot == K) {
          std::vector<GroupKey> key(KG);
          for (std::size_t i = 0; i < KG; ++i) {
            key[i].second = mg[i];
            for (std::size_t k = 0; k < KE; ++k) {
              const std::size_t s = i * KE + k;
              key[i].first.emplace_back(eq[assign[s]], need[s]);
            }
            std::sort(key[i].first.begin(), key[i].first.end(), [](auto a, auto b) {
              return a.second != b.second ? a.second > b.second : a.first > b.first;
            });
          }
          std::sort(key.begin(), key.end(), std::greater<>());
          if (!seen.insert(key).second) return;

          GroupingRequest request;
          request.equipped = eq;
          request.used.assign(K, 0);
          std::vector<bool> bound(K, false);
          for (const auto& [members, m] : key) {
            auto& group = request.groups.emplace_back();
            for (const auto& [e, u] : members) {
              std::size_t user = 0;
              while (bound[user] || eq[user] != e) ++user;
              bound[user] = true;
              request.used[user] = u;
              group.push_back(user);
            }
            request.group_mode_counts.push_back(m);
          }
          out.push_back(GroupingConfig::validate(request));
          return;
        }
        std::set<int> tried;
        for (std::size_t u = 0; u < K; ++u) {
          if (taken[u] || eq[u] < need[slot]) continue;
          if (!space.mode_reduction && eq[u] != need[slot]) continue;
          // Users with equal equipped counts are interchangeable.
          if (!tried.insert(eq[u]).second) continue;
          taken[u] = true;
          assign[slot] = u;
          self(self, slot + 1);
          taken[u] = false;
        }
      };
      rec(rec, 0);
    });
  });
}

bool admitted(const Candidate& c, Budget budget, bool grouped_only, bool flat_only) {
  if (budget && c.length > *budget) return false;
  if (grouped_only && c.config.is_flat()) return false;
  if (flat_only && !c.config.is_flat()) return false;
  return true;
}

bool budget_less(const Budget& a, const Budget& b) {
  if (!a) return false;
  if (!b) return true;
  return *a < *b;
}

std::string describe(const ReceiverAlignment& r, const GroupingConfig& config, std::uint64_t seed) {
  std::ostringstream out;
  out << "receiver " << config.label(r.receiver) << " seed " << seed << ": measured (" << r.desired
      << "," << r.iui << "," << r.igi << "," << r.joint << ") predicted (" << r.predicted.desired
      << "," << r.predicted.iui << "," << r.predicted.igi << "," << r.predicted_joint() << ")";
  return out.str();
}

std::string compress(const std::vector<std::uint64_t>& values) {
  std::ostringstream out;
  for (std::size_t n = 0; n < values.size();) {
    std::size_t m = n;
    while (m + 1 < values.size() && values[m + 1] == values[m] + 1) ++m;
    out << (n ? "," : "") << values[n];
    if (m > n) out << "-" << values[m];
    n = m + 1;
  }
  return out.str();
}

}  // namespace

void SearchSpace::check() const {
  const ModeSpec spec(equipped);
  if (budget && *budget < 1) throw ConfigError("length budget L >= 1");
}

bool ranks_before(const Candidate& a, const Candidate& b) {
  if (a.dof != b.dof) return a.dof > b.dof;
  if (a.length != b.length) return a.length < b.length;
  if (a.config.num_groups() != b.config.num_groups())
    return a.config.num_groups() < b.config.num_groups();
  return a.config.canonical() < b.config.canonical();
}

std::vector<GroupingConfig> enumerate_configs(const SearchSpace& space) {
  space.check();
  std::vector<GroupingConfig> out;
  enumerate_flat(space, out);
  const std::size_t K = space.equipped.size();
  for (std::size_t KG = 2; KG <= K; ++KG) {
    if (K % KG != 0) continue;
    if (!space.group_counts.empty() &&
        std::find(space.group_counts.begin(), space.group_counts.end(), KG) == space.group_counts.end())
      continue;
    enumerate_grouped(space, KG, out);
  }
  return out;
}

std::vector<Candidate> evaluate(std::span<const GroupingConfig> configs, Exec exec) {
  std::vector<std::optional<Candidate>> slots(configs.size());
  const auto n = static_cast<long>(configs.size());
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
  for (long c = 0; c < n; ++c) {
    const auto& cfg = configs[c];
    slots[c] = Candidate{cfg, sum_dof_grouped(cfg.element_counts(), cfg.group_mode_counts()),
                         grouped_length(cfg)};
  }
  std::vector<Candidate> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

std::optional<Candidate> best_within(std::span<const Candidate> candidates, Budget budget,
                                     bool grouped_only, bool flat_only, Exec exec) {
  if (exec == Exec::serial) {
    std::optional<Candidate> best;
    for (const auto& c : candidates)
      if (admitted(c, budget, grouped_only, flat_only) && (!best || ranks_before(c, *best))) best = c;
    return best;
  }

  // Per-thread argmax indices, merged under the same total order, so the
  // winner does not depend on the schedule.
  long best = -1;
  const auto n = static_cast<long>(candidates.size());
#pragma omp parallel
  {
    long local = -1;
#pragma omp for schedule(static) nowait
    for (long c = 0; c < n; ++c) {
      if (!admitted(candidates[c], budget, grouped_only, flat_only)) continue;
      if (local < 0 || ranks_before(candidates[c], candidates[local])) local = c;
    }
#pragma omp critical(bia_best_within)
    {
      if (local >= 0 && (best < 0 || ranks_before(candidates[local], candidates[best]))) best = local;
    }
  }
  if (best < 0) return std::nullopt;
  return candidates[best];
}

StrategyBest optimize(const SearchSpace& space, Exec exec) {
  const auto configs = enumerate_configs(space);
  const auto candidates = evaluate(configs, exec);
  StrategyBest out;
  out.conventional = best_within(candidates, space.budget, false, true, exec);
  out.grouped = best_within(candidates, space.budget, space.require_grouping, false, exec);
  return out;
}

SweepResult sweep(const SearchSpace& space, std::span<const Budget> budgets, Exec exec) {
  for (const auto& b : budgets)
    if (b && *b < 1) throw ConfigError("length budget L >= 1");
  const auto configs = enumerate_configs(space);
  const auto candidates = evaluate(configs, exec);

  SweepResult result;
  for (const auto& b : budgets) {
    SweepRow row;
    row.budget = b;
    row.conventional = best_within(candidates, b, false, true, exec);
    row.grouped = best_within(candidates, b, space.require_grouping, false, exec);
    result.rows.push_back(std::move(row));
  }

  std::vector<std::size_t> order(result.rows.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return budget_less(result.rows[a].budget, result.rows[b].budget);
  });
  auto check = [&](auto member) {
    std::optional<Rational> last;
    for (std::size_t idx : order) {
      const auto& c = result.rows[idx].*member;
      if (!c) {
        if (last) throw std::logic_error("sweep lost feasibility as the budget grew");
        continue;
      }
      if (last && c->dof < *last) throw std::logic_error("sweep DoF decreased as the budget grew");
      last = c->dof;
    }
  };
  check(&SweepRow::conventional);
  check(&SweepRow::grouped);
  return result;
}

bool VerificationReport::all_verified() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.verified; });
}

VerificationEntry verify_config(const GroupingConfig& config, std::span<const std::uint64_t> seeds,
                                Exec exec) {
  VerificationEntry entry;
  entry.config = config.canonical();
  if (seeds.empty()) {
    entry.reason = "no seeds";
    return entry;
  }
  const auto length = static_cast<std::size_t>(grouped_length(config));
  const auto reports = seed_reports(config, length, seeds, exec);
  for (std::size_t s = 0; s < reports.size(); ++s) {
    for (const auto& r : reports[s].receivers) {
      if (!r.matches()) {
        entry.reason = describe(r, config, seeds[s]);
        return entry;
      }
    }
  }
  entry.verified = true;
  return entry;
}

VerificationEntry verify_request(const GroupingRequest& request,
                                 std::span<const std::uint64_t> seeds, Exec exec) {
  try {
    return verify_config(GroupingConfig::validate(request), seeds, exec);
  } catch (const ConfigError& e) {
    VerificationEntry entry;
    entry.config = "invalid";
    entry.reason = e.what();
    return entry;
  }
}

VerificationReport verify_sweep(SweepResult& result, std::span<const std::uint64_t> seeds, Exec exec) {
  VerificationReport report;
  std::map<std::string, bool> verdicts;
  auto check = [&](const std::optional<Candidate>& c) {
    if (!c) return true;
    const auto key = c->config.canonical();
    auto it = verdicts.find(key);
    if (it == verdicts.end()) {
      auto entry = verify_config(c->config, seeds, exec);
      it = verdicts.emplace(key, entry.verified).first;
      report.entries.push_back(std::move(entry));
    }
    return it->second;
  };
  for (auto& row : result.rows) {
    const bool conv = check(row.conventional);
    const bool grp = check(row.grouped);
    row.verified = conv && grp;
  }
  return report;
}

BandAnalysis analyse_band(const SweepResult& result,
                          std::optional<std::pair<std::uint64_t, std::uint64_t>> reference) {
  std::vector<const SweepRow*> rows;
  for (const auto& r : result.rows) rows.push_back(&r);
  std::stable_sort(rows.begin(), rows.end(),
                   [](const SweepRow* a, const SweepRow* b) { return budget_less(a->budget, b->budget); });

  BandAnalysis out;
  std::vector<std::uint64_t> finite;
  for (const auto* r : rows) {
    if (!r->budget) continue;
    finite.push_back(*r->budget);
    if (r->grouped && r->conventional && r->grouped->dof > r->conventional->dof)
      out.advantage_budgets.push_back(*r->budget);
  }
  if (!out.advantage_budgets.empty())
    out.advantage = std::make_pair(out.advantage_budgets.front(), out.advantage_budgets.back());

  std::size_t tail = rows.size();
  while (tail > 0 && rows[tail - 1]->grouped && rows[tail - 1]->grouped->config.is_flat()) --tail;
  if (tail < rows.size()) {
    out.flat_from = rows[tail]->budget;
    out.flat_tail = true;
    for (std::size_t n = tail; n < rows.size(); ++n) {
      const auto* r = rows[n];
      if (!r->conventional || r->conventional->dof != r->grouped->dof) out.equal_after_flat = false;
    }
  }

  if (reference) {
    const auto [lo, hi] = *reference;
    std::vector<std::uint64_t> extra;
    std::vector<std::uint64_t> missing;
    for (std::uint64_t b : finite) {
      const bool wins = std::binary_search(out.advantage_budgets.begin(), out.advantage_budgets.end(), b);
      const bool inside = b >= lo && b <= hi;
      if (wins && !inside) extra.push_back(b);
      if (!wins && inside) missing.push_back(b);
    }
    if (!extra.empty())
      out.notes.push_back("grouping wins outside reference band [" + std::to_string(lo) + "," +
                          std::to_string(hi) + "] at L=" + compress(extra));
    if (!missing.empty())
      out.notes.push_back("no grouping advantage inside reference band [" + std::to_string(lo) + "," +
                          std::to_string(hi) + "] at L=" + compress(missing));
  }
  return out;
}

}  // namespace bia
