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

#include "bia/signal.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace bia {

namespace {

void require_consistent(const StreamPlacement& placement, const PresetPattern& pattern,
                        const ChannelSet& channels) {
  if (placement.users() != pattern.users.size() || placement.users() != channels.users())
    throw std::invalid_argument("placement, pattern and channels disagree on the user count");
  if (placement.length != pattern.length() || placement.length != channels.length())
    throw std::invalid_argument("placement, pattern and channels disagree on the supersymbol length");
}

ComplexMatrix interference_matrix(const std::vector<ComplexMatrix>& per_tx, std::size_t rx,
                                  const auto& keep) {
  ComplexMatrix out(per_tx[rx].rows(), 0);
  for (std::size_t tx = 0; tx < per_tx.size(); ++tx)
    if (tx != rx && keep(tx)) out = hstack(out, per_tx[tx]);
  return out;
}

std::vector<ComplexMatrix> all_transmitters(const StreamPlacement& placement,
                                            const PresetPattern& pattern,
                                            const ChannelSet& channels, std::size_t rx) {
  std::vector<ComplexMatrix> out;
  out.reserve(placement.users());
  for (std::size_t tx = 0; tx < placement.users(); ++tx)
    out.push_back(effective_matrix(placement, pattern, channels, rx, tx));
  return out;
}

ReceiverAlignment measure_receiver(const StreamPlacement& placement, const PresetPattern& pattern,
                                   const ChannelSet& channels, const GroupingConfig& config,
                                   const std::vector<RankPrediction>& predictions, std::size_t rx) {
  const auto per_tx = all_transmitters(placement, pattern, channels, rx);
  const std::size_t group = config.ref(rx).i;

  ReceiverAlignment out;
  out.receiver = rx;
  for (std::size_t tx = 0; tx < per_tx.size(); ++tx) {
    out.per_transmitter.push_back(numerical_rank(per_tx[tx]));
    out.predicted_per_transmitter.push_back(predicted_rank(config, rx, tx));
  }
  const auto interference = interference_matrix(per_tx, rx, [](std::size_t) { return true; });
  out.desired = out.per_transmitter[rx];
  out.iui = numerical_rank(interference_matrix(
      per_tx, rx, [&](std::size_t tx) { return config.ref(tx).i == group; }));
  out.igi = numerical_rank(interference_matrix(
      per_tx, rx, [&](std::size_t tx) { return config.ref(tx).i != group; }));
  out.interference = numerical_rank(interference);
  out.joint = numerical_rank(hstack(per_tx[rx], interference));
  out.predicted = predictions[rx];
  return out;
}

}  // namespace

StreamPlacement build_streams(const PresetPattern& pattern, const GroupingConfig& config) {
  const auto me = config.element_counts();
  const auto mg = config.group_mode_counts();
  if (pattern.users.size() != config.users() || pattern.element_length != flat_length(me) ||
      pattern.length() != grouped_length(config))
    throw ConfigError("pattern was not constructed from this grouping");

  StreamPlacement placement;
  placement.length = pattern.length();
  placement.streams.resize(config.users());
  for (std::size_t u = 0; u < config.users(); ++u) {
    const UserRef r = config.ref(u);
    placement.dims.push_back(config.used_modes(u));
    const auto element_slots = flat_stream_slots(me, r.k);
    const auto group_slots = flat_stream_slots(mg, r.i);
    for (const auto& outer : group_slots) {
      for (const auto& inner : element_slots) {
        Stream s;
        s.slots.reserve(outer.size() * inner.size());
        for (std::size_t j2 : outer)
          for (std::size_t j1 : inner) s.slots.push_back(j2 * pattern.element_length + j1);
        placement.streams[u].push_back(std::move(s));
      }
    }
  }
  return placement;
}

SymbolSet random_symbols(const StreamPlacement& placement, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
  SymbolSet out;
  for (std::size_t u = 0; u < placement.users(); ++u) {
    const auto d = static_cast<Eigen::Index>(placement.dims[u]);
    ComplexVector x(static_cast<Eigen::Index>(placement.columns(u)));
    for (std::size_t s = 0; s < placement.streams[u].size(); ++s) {
      ComplexVector v(d);
      for (Eigen::Index a = 0; a < d; ++a) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        v(a) = {re, im};
      }
      x.segment(static_cast<Eigen::Index>(s) * d, d) = v / v.norm();
    }
    out.push_back(std::move(x));
  }
  return out;
}

SymbolSet zero_symbols(const StreamPlacement& placement) {
  SymbolSet out;
  for (std::size_t u = 0; u < placement.users(); ++u)
    out.push_back(ComplexVector::Zero(static_cast<Eigen::Index>(placement.columns(u))));
  return out;
}

ComplexMatrix effective_matrix(const StreamPlacement& placement, const PresetPattern& pattern,
                               const ChannelSet& channels, std::size_t rx, std::size_t tx) {
  require_consistent(placement, pattern, channels);
  const auto d = static_cast<Eigen::Index>(placement.dims[tx]);
  ComplexMatrix e = ComplexMatrix::Zero(static_cast<Eigen::Index>(placement.length),
                                        static_cast<Eigen::Index>(placement.columns(tx)));
  const auto& streams = placement.streams[tx];
  for (std::size_t s = 0; s < streams.size(); ++s) {
    for (std::size_t t : streams[s].slots) {
      e.block(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(s) * d, 1, d) =
          channels.row(t, rx, tx, pattern.at(rx, t).physical);
    }
  }
  return e;
}

ReceivedSet assemble_received(const StreamPlacement& placement, const PresetPattern& pattern,
                              const ChannelSet& channels, const SymbolSet& symbols,
                              double noise_scale, std::uint64_t noise_seed, Exec exec) {
  require_consistent(placement, pattern, channels);
  if (symbols.size() != placement.users())
    throw std::invalid_argument("one symbol vector per user required");
  for (std::size_t u = 0; u < placement.users(); ++u)
    if (static_cast<std::size_t>(symbols[u].size()) != placement.columns(u))
      throw std::invalid_argument("symbol dimension mismatch for user " + std::to_string(u + 1));

  const auto K = static_cast<long>(placement.users());
  const auto L = static_cast<Eigen::Index>(placement.length);
  ReceivedSet out(placement.users(), ComplexVector::Zero(L));
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
  for (long rx = 0; rx < K; ++rx) {
    for (std::size_t tx = 0; tx < placement.users(); ++tx)
      out[rx] += effective_matrix(placement, pattern, channels, static_cast<std::size_t>(rx), tx) *
                 symbols[tx];
  }

  if (noise_scale != 0.0) {
    std::mt19937_64 rng(noise_seed);
    std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
    for (auto& y : out)
      for (Eigen::Index t = 0; t < L; ++t) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        y(t) += noise_scale * std::complex<double>(re, im);
      }
  }
  return out;
}

bool ReceiverAlignment::matches() const {
  if (per_transmitter.size() != predicted_per_transmitter.size()) return false;
  for (std::size_t n = 0; n < per_transmitter.size(); ++n)
    if (per_transmitter[n] != predicted_per_transmitter[n]) return false;
  return desired == predicted.desired && iui == predicted.iui && igi == predicted.igi &&
         interference == predicted.interference() && joint == predicted.total();
}

bool AlignmentReport::all_match() const {
  for (const auto& r : receivers)
    if (!r.matches()) return false;
  return true;
}

AlignmentReport alignment_report(const StreamPlacement& placement, const PresetPattern& pattern,
                                 const ChannelSet& channels, const GroupingConfig& config,
                                 Exec exec) {
  require_consistent(placement, pattern, channels);
  const auto predictions = rank_predictions(config);
  AlignmentReport report;
  report.receivers.resize(config.users());
  const auto K = static_cast<long>(config.users());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
  for (long rx = 0; rx < K; ++rx)
    report.receivers[rx] = measure_receiver(placement, pattern, channels, config, predictions,
                                            static_cast<std::size_t>(rx));
  return report;
}

std::vector<AlignmentReport> seed_reports(const GroupingConfig& config, std::size_t coherence,
                                          std::span<const std::uint64_t> seeds, Exec exec) {
  const auto pattern = grouped_pattern(config);
  const auto placement = build_streams(pattern, config);
  std::vector<AlignmentReport> out(seeds.size());
  const auto n = static_cast<long>(seeds.size());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
  for (long s = 0; s < n; ++s) {
    const auto channels = draw_channels(config, coherence, seeds[s]);
    out[s] = alignment_report(placement, pattern, channels, config, Exec::serial);
  }
  return out;
}

DecodeResult decode(const StreamPlacement& placement, const PresetPattern& pattern,
                    const ChannelSet& channels, const ReceivedSet& received, Exec exec) {
  require_consistent(placement, pattern, channels);
  if (received.size() != placement.users())
    throw std::invalid_argument("one received vector per receiver required");

  DecodeResult result;
  result.symbols.resize(placement.users());
  std::vector<std::vector<std::size_t>> lost(placement.users());
  const auto K = static_cast<long>(placement.users());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
  for (long rx_l = 0; rx_l < K; ++rx_l) {
    const auto rx = static_cast<std::size_t>(rx_l);
    const auto per_tx = all_transmitters(placement, pattern, channels, rx);
    const ComplexMatrix basis =
        column_basis(interference_matrix(per_tx, rx, [](std::size_t) { return true; }));
    const ComplexMatrix& desired = per_tx[rx];
    const ComplexMatrix projected = desired - basis * (basis.adjoint() * desired);
    const ComplexVector y = received[rx] - basis * (basis.adjoint() * received[rx]);

    const std::size_t rank = numerical_rank(projected);
    const auto d = static_cast<Eigen::Index>(placement.dims[rx]);
    if (rank < static_cast<std::size_t>(projected.cols())) {
      for (std::size_t s = 0; s < placement.streams[rx].size(); ++s) {
        ComplexMatrix others(projected.rows(), projected.cols() - d);
        const auto start = static_cast<Eigen::Index>(s) * d;
        others << projected.leftCols(start), projected.rightCols(projected.cols() - start - d);
        if (rank - numerical_rank(others) < static_cast<std::size_t>(d)) lost[rx].push_back(s);
      }
    }
    result.symbols[rx] = projected.completeOrthogonalDecomposition().solve(y);
  }
  for (std::size_t u = 0; u < lost.size(); ++u)
    for (std::size_t s : lost[u]) result.unrecoverable.emplace_back(u, s);
  return result;
}

double relative_error(const SymbolSet& estimate, const SymbolSet& truth) {
  if (estimate.size() != truth.size()) throw std::invalid_argument("symbol set size mismatch");
  double err = 0.0;
  double ref = 0.0;
  for (std::size_t u = 0; u < truth.size(); ++u) {
    if (estimate[u].size() != truth[u].size())
      throw std::invalid_argument("symbol dimension mismatch");
    err += (estimate[u] - truth[u]).squaredNorm();
    ref += truth[u].squaredNorm();
  }
  return ref > 0.0 ? std::sqrt(err / ref) : std::sqrt(err);
}

}  // namespace bia
