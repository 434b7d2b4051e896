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
#include <vector>

#include "bia/grouping.hpp"
#include "bia/linalg.hpp"

namespace bia {

/// Block-fading channel gains. For every coherence block and every
/// (receiver, transmitter) pair there is one matrix whose row m-1 is the
/// channel row vector seen when the receiver sits in physical mode m.
/// Entries are i.i.d. CN(0, 1). Immutable after construction.
class ChannelSet {
 public:
  ChannelSet(std::vector<int> dims, std::size_t length, std::size_t coherence, std::uint64_t seed,
             std::vector<ComplexMatrix> gains);

  std::size_t users() const { return dims_.size(); }
  std::size_t length() const { return length_; }
  std::size_t coherence() const { return coherence_; }
  std::size_t blocks() const { return blocks_; }
  std::uint64_t seed() const { return seed_; }
  int dim(std::size_t user) const { return dims_[user]; }

  std::size_t block_of(std::size_t slot) const { return slot / coherence_; }

  const ComplexMatrix& gains(std::size_t block, std::size_t rx, std::size_t tx) const {
    return gains_[(block * users() + rx) * users() + tx];
  }

  /// Channel row at 0-based `slot` for a receiver in 1-based physical mode.
  auto row(std::size_t slot, std::size_t rx, std::size_t tx, int physical_mode) const {
    return gains(block_of(slot), rx, tx).row(physical_mode - 1);
  }

 private:
  std::vector<int> dims_;
  std::size_t length_;
  std::size_t coherence_;
  std::size_t blocks_;
  std::uint64_t seed_;
  std::vector<ComplexMatrix> gains_;
};

/// Draws every block from one mt19937_64 stream in (block, rx, tx, mode,
/// antenna) order, so equal seeds give identical sets. A new block starts at
/// every slot index that is a multiple of `coherence` (0-based).
ChannelSet draw_channels(const GroupingConfig& config, std::size_t coherence, std::uint64_t seed);

}  // namespace bia
