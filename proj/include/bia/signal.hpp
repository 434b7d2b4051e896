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
#include <utility>
#include <vector>

#include "bia/channel.hpp"
#include "bia/dof.hpp"
#include "bia/exec.hpp"
#include "bia/grouping.hpp"
#include "bia/linalg.hpp"
#include "bia/pattern.hpp"

namespace bia {

/// One symbol vector of dimension M' repeated on `slots` (0-based, ascending).
struct Stream {
  std::vector<std::size_t> slots;
};

/// Transmit schedule of every user. Users are indexed by GroupingConfig::index.
struct StreamPlacement {
  std::size_t length = 0;
  std::vector<int> dims;                     // M' per user
  std::vector<std::vector<Stream>> streams;  // per user

  std::size_t users() const { return dims.size(); }
  /// Columns of the user's effective matrix: streams * M'.
  std::size_t columns(std::size_t user) const {
    return streams[user].size() * static_cast<std::size_t>(dims[user]);
  }
};

/// Two-level placement: stream (sigma, tau) of user [k,i] occupies the m1
/// slots of flat stream tau (position k in the element pattern) inside every
/// m2 slot of flat stream sigma (group i in the group pattern). Streams are
/// ordered group-level tuple first, element-level tuple second.
StreamPlacement build_streams(const PresetPattern& pattern, const GroupingConfig& config);

/// Per user, every stream's symbol vector concatenated in stream order.
using SymbolSet = std::vector<ComplexVector>;

/// Unit-norm CN symbol vectors per stream, reproducible from the seed.
SymbolSet random_symbols(const StreamPlacement& placement, std::uint64_t seed);
SymbolSet zero_symbols(const StreamPlacement& placement);

/// L x (streams * M'_tx) matrix. Row t of stream block s is the channel row
/// h_rx^tx at the receiver's physical mode in slot t when t is one of the
/// stream's slots, and zero otherwise.
ComplexMatrix effective_matrix(const StreamPlacement& placement, const PresetPattern& pattern,
                               const ChannelSet& channels, std::size_t rx, std::size_t tx);

/// Received vector (length L) per receiver.
using ReceivedSet = std::vector<ComplexVector>;

/// y_rx = sum_tx effective_matrix(rx, tx) * x_tx + noise_scale * z, z ~ CN(0, 1)
/// drawn from `noise_seed`. noise_scale = 0 is exact.
ReceivedSet assemble_received(const StreamPlacement& placement, const PresetPattern& pattern,
                              const ChannelSet& channels, const SymbolSet& symbols,
                              double noise_scale = 0.0, std::uint64_t noise_seed = 0,
                              Exec exec = Exec::parallel);

/// Measured vs predicted subspace dimensions at one receiver.
struct ReceiverAlignment {
  std::size_t receiver = 0;
  std::vector<std::size_t> per_transmitter;  // measured, own index = desired
  std::size_t desired = 0;
  std::size_t iui = 0;
  std::size_t igi = 0;
  std::size_t interference = 0;  // all interferers stacked
  std::size_t joint = 0;         // [desired | interference]

  std::vector<std::uint64_t> predicted_per_transmitter;
  RankPrediction predicted;

  std::uint64_t predicted_joint() const { return predicted.total(); }
  bool matches() const;

  bool operator==(const ReceiverAlignment&) const = default;
};

struct AlignmentReport {
  std::vector<ReceiverAlignment> receivers;

  bool all_match() const;
  bool operator==(const AlignmentReport&) const = default;
};

/// Numerical ranks of every receiver's desired, per-interferer, intra-group,
/// inter-group, combined and joint matrices, with closed-form predictions
/// attached. Receivers are processed in parallel unless exec is serial.
AlignmentReport alignment_report(const StreamPlacement& placement, const PresetPattern& pattern,
                                 const ChannelSet& channels, const GroupingConfig& config,
                                 Exec exec = Exec::parallel);

/// One alignment report per seed with channels of the given coherence length.
std::vector<AlignmentReport> seed_reports(const GroupingConfig& config, std::size_t coherence,
                                          std::span<const std::uint64_t> seeds,
                                          Exec exec = Exec::parallel);

struct DecodeResult {
  SymbolSet symbols;
  /// (user, stream) pairs whose projected desired columns are not independent.
  std::vector<std::pair<std::size_t, std::size_t>> unrecoverable;

  bool complete() const { return unrecoverable.empty(); }
};

/// Interference nulling followed by least squares: project onto the
/// orthogonal complement of the interference column space, then solve for the
/// desired streams.
DecodeResult decode(const StreamPlacement& placement, const PresetPattern& pattern,
                    const ChannelSet& channels, const ReceivedSet& received,
                    Exec exec = Exec::parallel);

/// ||estimate - truth|| / ||truth|| over all users (absolute when truth is 0).
double relative_error(const SymbolSet& estimate, const SymbolSet& truth);

}  // namespace bia
