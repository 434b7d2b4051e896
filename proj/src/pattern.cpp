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

#include "bia/pattern.hpp"

#include <sstream>
#include <stdexcept>

namespace bia {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("supersymbol length exceeds 64 bits");
  return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("supersymbol length exceeds 64 bits");
  return r;
}

// Product of (M_q - 1) over q != skip (skip == size() means no exclusion).
std::uint64_t radix_product(std::span<const int> counts, std::size_t skip) {
  std::uint64_t p = 1;
  for (std::size_t q = 0; q < counts.size(); ++q)
    if (q != skip) p = checked_mul(p, static_cast<std::uint64_t>(counts[q] - 1));
  return p;
}

// Unchecked flat layout. Accepts the degenerate single entry {1} (one slot,
// one stream) which stands for the m2 level of an ungrouped config.
class FlatLayout {
 public:
  explicit FlatLayout(std::span<const int> counts) : counts_(counts.begin(), counts.end()) {
    const std::size_t K = counts_.size();
    block_ = radix_product(counts_, K);
    std::size_t offset = block_;
    for (std::size_t k = 0; k < K; ++k) {
      segment_start_.push_back(offset);
      segment_size_.push_back(radix_product(counts_, k));
      offset = checked_add(offset, segment_size_.back());
    }
    length_ = offset;
  }

  std::size_t length() const { return length_; }

  std::vector<ModeSequence> sequences() const {
    const std::size_t K = counts_.size();
    std::vector<ModeSequence> seq(K, ModeSequence(length_, 0));
    std::vector<int> digits(K);
    for (std::size_t t = 0; t < block_; ++t) {
      decode(t, K, digits);
      for (std::size_t k = 0; k < K; ++k) seq[k][t] = digits[k] + 1;
    }
    for (std::size_t k = 0; k < K; ++k) {
      for (std::size_t j = 0; j < segment_size_[k]; ++j) {
        decode(j, k, digits);
        const std::size_t t = segment_start_[k] + j;
        for (std::size_t q = 0; q < K; ++q) seq[q][t] = q == k ? counts_[k] : digits[q] + 1;
      }
    }
    return seq;
  }

  std::vector<std::vector<std::size_t>> stream_slots(std::size_t user) const {
    const std::size_t K = counts_.size();
    std::vector<std::vector<std::size_t>> streams;
    std::vector<int> digits(K);
    for (std::size_t j = 0; j < segment_size_[user]; ++j) {
      decode(j, user, digits);
      auto& slots = streams.emplace_back();
      for (int d = 0; d < counts_[user] - 1; ++d) {
        digits[user] = d;
        slots.push_back(encode(digits));
      }
      slots.push_back(segment_start_[user] + j);
    }
    return streams;
  }

 private:
  // Mixed-radix decode over all users except `skip`, last user fastest.
  void decode(std::size_t value, std::size_t skip, std::vector<int>& digits) const {
    for (std::size_t q = counts_.size(); q-- > 0;) {
      if (q == skip) continue;
      const auto radix = static_cast<std::size_t>(counts_[q] - 1);
      digits[q] = static_cast<int>(value % radix);
      value /= radix;
    }
  }

  std::size_t encode(const std::vector<int>& digits) const {
    std::size_t value = 0;
    for (std::size_t q = 0; q < counts_.size(); ++q)
      value = value * static_cast<std::size_t>(counts_[q] - 1) + static_cast<std::size_t>(digits[q]);
    return value;
  }

  std::vector<int> counts_;
  std::size_t block_ = 0;
  std::size_t length_ = 0;
  std::vector<std::size_t> segment_start_;
  std::vector<std::size_t> segment_size_;
};

void require_modes(std::span<const int> counts) {
  if (counts.empty()) throw ConfigError("mode list is nonempty");
  for (int m : counts)
    if (m < 2) throw ConfigError("every entry M_k >= 2 (got " + std::to_string(m) + ")");
}

}  // namespace

std::vector<ModeSequence> base_pattern(std::span<const int> element_counts) {
  require_modes(element_counts);
  return FlatLayout(element_counts).sequences();
}

std::vector<std::pair<int, int>> sequence_cartesian_product(std::span<const int> a,
                                                            std::span<const int> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("cartesian product of an empty sequence");
  std::vector<std::pair<int, int>> out;
  out.reserve(a.size() * b.size());
  for (int bj : b)
    for (int ai : a) out.emplace_back(ai, bj);
  return out;
}

std::uint64_t flat_length(std::span<const int> modes) {
  require_modes(modes);
  std::uint64_t total = radix_product(modes, modes.size());
  for (std::size_t k = 0; k < modes.size(); ++k) total = checked_add(total, radix_product(modes, k));
  return total;
}

std::uint64_t grouped_length(const GroupingConfig& config) {
  const std::uint64_t element = flat_length(config.element_counts());
  return config.is_flat() ? element : checked_mul(element, flat_length(config.group_mode_counts()));
}

std::vector<std::vector<std::size_t>> flat_stream_slots(std::span<const int> counts,
                                                        std::size_t user) {
  if (!(counts.size() == 1 && counts[0] == 1)) require_modes(counts);
  if (user >= counts.size()) throw std::out_of_range("flat_stream_slots: user index");
  return FlatLayout(counts).stream_slots(user);
}

ModeSequence PresetPattern::physical(std::size_t user) const {
  ModeSequence out;
  out.reserve(users[user].size());
  for (const auto& m : users[user]) out.push_back(m.physical);
  return out;
}

PresetPattern grouped_pattern(const GroupingConfig& config) {
  const FlatLayout element(config.element_counts());
  const FlatLayout group(config.group_mode_counts());
  const auto m1 = element.sequences();
  const auto m2 = group.sequences();

  PresetPattern pattern;
  pattern.element_length = element.length();
  pattern.group_length = group.length();
  pattern.users.resize(config.users());
  for (std::size_t u = 0; u < config.users(); ++u) {
    const UserRef r = config.ref(u);
    const int me = config.element_counts()[r.k];
    auto& seq = pattern.users[u];
    seq.reserve(pattern.length());
    for (const auto& [p, q] : sequence_cartesian_product(m1[r.k], m2[r.i]))
      seq.push_back({p, q, (q - 1) * me + p});
  }
  return pattern;
}

std::string render_pattern_table(const PresetPattern& pattern, const GroupingConfig& config) {
  std::ostringstream out;
  out << "# bia-pattern v1 config=" << config.canonical() << " length=" << pattern.length() << '\n';
  out << "slot";
  for (std::size_t u = 0; u < config.users(); ++u) out << ' ' << config.label(u);
  out << '\n';
  for (std::size_t t = 0; t < pattern.length(); ++t) {
    out << t + 1;
    for (std::size_t u = 0; u < config.users(); ++u) {
      const auto& m = pattern.at(u, t);
      out << ' ' << m.element << '.' << m.group << '/' << m.physical;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace bia
