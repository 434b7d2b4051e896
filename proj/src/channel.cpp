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

#include "bia/channel.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "bia/pattern.hpp"

namespace bia {

ChannelSet::ChannelSet(std::vector<int> dims, std::size_t length, std::size_t coherence,
                       std::uint64_t seed, std::vector<ComplexMatrix> gains)
    : dims_(std::move(dims)),
      length_(length),
      coherence_(coherence),
      blocks_(coherence == 0 ? 0 : (length + coherence - 1) / coherence),
      seed_(seed),
      gains_(std::move(gains)) {
  if (coherence_ == 0) throw std::invalid_argument("coherence length L_c >= 1");
  if (gains_.size() != blocks_ * users() * users())
    throw std::invalid_argument("channel gain count does not match blocks x users^2");
}

ChannelSet draw_channels(const GroupingConfig& config, std::size_t coherence, std::uint64_t seed) {
  if (coherence == 0) throw std::invalid_argument("coherence length L_c >= 1");
  const std::size_t K = config.users();
  const auto length = static_cast<std::size_t>(grouped_length(config));
  const std::size_t blocks = (length + coherence - 1) / coherence;

  std::vector<int> dims(K);
  for (std::size_t u = 0; u < K; ++u) dims[u] = config.used_modes(u);

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
  std::vector<ComplexMatrix> gains;
  gains.reserve(blocks * K * K);
  for (std::size_t b = 0; b < blocks; ++b) {
    for (std::size_t rx = 0; rx < K; ++rx) {
      for (std::size_t tx = 0; tx < K; ++tx) {
        ComplexMatrix h(dims[rx], dims[tx]);
        for (Eigen::Index m = 0; m < h.rows(); ++m)
          for (Eigen::Index a = 0; a < h.cols(); ++a) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            h(m, a) = {re, im};
          }
        gains.push_back(std::move(h));
      }
    }
  }
  return ChannelSet(std::move(dims), length, coherence, seed, std::move(gains));
}

}  // namespace bia
