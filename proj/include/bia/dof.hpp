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
#include <vector>

#include <boost/rational.hpp>

#include "bia/grouping.hpp"

namespace bia {

using Rational = boost::rational<std::int64_t>;

/// Closed-form subspace dimensions seen by one receiver.
struct RankPrediction {
  std::uint64_t desired = 0;
  std::uint64_t iui = 0;  // intra-group interferers
  std::uint64_t igi = 0;  // inter-group interferers

  std::uint64_t interference() const { return iui + igi; }
  std::uint64_t total() const { return desired + iui + igi; }
  bool operator==(const RankPrediction&) const = default;
};

/// Streams sent by user u: prod_{p != k}(M_E_p - 1) * prod_{q != i}(M_G_q - 1).
std::uint64_t stream_count(const GroupingConfig& config, std::size_t user);

/// Dimension occupied at receiver rx by transmitter tx (rx == tx gives the
/// desired dimension).
std::uint64_t predicted_rank(const GroupingConfig& config, std::size_t rx, std::size_t tx);

/// One prediction per receiver, indexed by GroupingConfig::index.
std::vector<RankPrediction> rank_predictions(const GroupingConfig& config);

/// sum_k M_k/(M_k-1) / (1 + sum_k 1/(M_k-1)).
Rational sum_dof_flat(std::span<const int> modes);

/// Element factor times group factor. A group list of exactly {1} is the
/// ungrouped case and contributes a factor of 1.
Rational sum_dof_grouped(std::span<const int> element_counts, std::span<const int> group_counts);

/// desired / (desired + iui + igi) per user.
std::vector<Rational> per_user_dof(const GroupingConfig& config);

struct DofReport {
  std::vector<Rational> per_user;
  Rational sum;
  std::uint64_t length = 0;
};

DofReport dof_report(const GroupingConfig& config);

/// Length reduction for the symmetric setting M_E = M_G = sqrt(M),
/// K_E = K_G = sqrt(K). `order_term` is (sqrt(M)-1)^(K-2 sqrt(K)) (sqrt(M)+1)^K.
struct ReductionRatio {
  std::uint64_t flat_length = 0;
  std::uint64_t grouped_length = 0;
  Rational ratio;
  Rational order_term;
};

/// Requires M and K to be perfect squares with M >= 4, K >= 1. K = 1 is the
/// single-group case (ratio 1).
ReductionRatio reduction_ratio(int M, int K);

/// "p/q".
std::string format_fraction(const Rational& r);

/// Decimal rendering with the given number of significant digits.
std::string format_decimal(const Rational& r, int significant = 6);

}  // namespace bia
