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

#include "bia/dof.hpp"

#include <cstdio>
#include <stdexcept>

#include "bia/pattern.hpp"

namespace bia {

namespace {

std::uint64_t product_except(std::span<const int> counts, std::size_t skip) {
  std::uint64_t p = 1;
  for (std::size_t q = 0; q < counts.size(); ++q)
    if (q != skip) p *= static_cast<std::uint64_t>(counts[q] - 1);
  return p;
}

std::int64_t checked_pow(std::int64_t base, int exponent) {
  std::int64_t r = 1;
  for (int n = 0; n < exponent; ++n)
    if (__builtin_mul_overflow(r, base, &r)) throw std::overflow_error("order term exceeds 64 bits");
  return r;
}

int exact_sqrt(int value, const char* what) {
  int s = 0;
  while ((s + 1) * (s + 1) <= value) ++s;
  if (s * s != value) throw ConfigError(std::string(what) + " must be a perfect square");
  return s;
}

}  // namespace

std::uint64_t stream_count(const GroupingConfig& config, std::size_t user) {
  const UserRef r = config.ref(user);
  return product_except(config.element_counts(), r.k) *
         product_except(config.group_mode_counts(), r.i);
}

std::uint64_t predicted_rank(const GroupingConfig& config, std::size_t rx, std::size_t tx) {
  const UserRef a = config.ref(rx);
  const UserRef b = config.ref(tx);
  const auto me = config.element_counts();
  const auto mg = config.group_mode_counts();
  const std::uint64_t streams = stream_count(config, tx);
  if (rx == tx) return static_cast<std::uint64_t>(config.used_modes(tx)) * streams;
  // Each interfering stream collapses onto the receiver's distinct channel
  // states across that stream's slots.
  if (a.i == b.i) return static_cast<std::uint64_t>(mg[a.i]) * streams;
  if (a.k == b.k) return static_cast<std::uint64_t>(me[a.k]) * streams;
  return streams;
}

std::vector<RankPrediction> rank_predictions(const GroupingConfig& config) {
  std::vector<RankPrediction> out(config.users());
  for (std::size_t rx = 0; rx < config.users(); ++rx) {
    for (std::size_t tx = 0; tx < config.users(); ++tx) {
      const std::uint64_t r = predicted_rank(config, rx, tx);
      if (rx == tx)
        out[rx].desired = r;
      else if (config.ref(rx).i == config.ref(tx).i)
        out[rx].iui += r;
      else
        out[rx].igi += r;
    }
  }
  return out;
}

Rational sum_dof_flat(std::span<const int> modes) {
  if (modes.empty()) throw ConfigError("mode list is nonempty");
  Rational numerator(0);
  Rational denominator(1);
  for (int m : modes) {
    if (m < 2) throw ConfigError("every entry M_k >= 2 (got " + std::to_string(m) + ")");
    numerator += Rational(m, m - 1);
    denominator += Rational(1, m - 1);
  }
  return numerator / denominator;
}

Rational sum_dof_grouped(std::span<const int> element_counts, std::span<const int> group_counts) {
  const Rational element = sum_dof_flat(element_counts);
  if (group_counts.size() == 1 && group_counts[0] == 1) return element;
  return element * sum_dof_flat(group_counts);
}

std::vector<Rational> per_user_dof(const GroupingConfig& config) {
  std::vector<Rational> out;
  for (const auto& p : rank_predictions(config))
    out.emplace_back(static_cast<std::int64_t>(p.desired), static_cast<std::int64_t>(p.total()));
  return out;
}

DofReport dof_report(const GroupingConfig& config) {
  DofReport report;
  report.per_user = per_user_dof(config);
  report.sum = sum_dof_grouped(config.element_counts(), config.group_mode_counts());
  report.length = grouped_length(config);
  return report;
}

ReductionRatio reduction_ratio(int M, int K) {
  if (K < 1) throw ConfigError("K >= 1");
  const int s = exact_sqrt(M, "M");
  const int n = exact_sqrt(K, "K");
  if (s < 2) throw ConfigError("sqrt(M) >= 2");

  ReductionRatio out;
  out.flat_length = flat_length(std::vector<int>(static_cast<std::size_t>(K), M));
  if (n == 1) {
    out.grouped_length = out.flat_length;
  } else {
    const std::vector<int> level(static_cast<std::size_t>(n), s);
    out.grouped_length = flat_length(level) * flat_length(level);
  }
  out.ratio = Rational(static_cast<std::int64_t>(out.flat_length),
                       static_cast<std::int64_t>(out.grouped_length));

  const int low_exp = K - 2 * n;
  const Rational low = low_exp >= 0 ? Rational(checked_pow(s - 1, low_exp))
                                    : Rational(1, checked_pow(s - 1, -low_exp));
  out.order_term = low * Rational(checked_pow(s + 1, K));
  return out;
}

std::string format_fraction(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string format_decimal(const Rational& r, int significant) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant,
                static_cast<double>(r.numerator()) / static_cast<double>(r.denominator()));
  return buf;
}

}  // namespace bia
