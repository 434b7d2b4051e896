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

#include "bia/report.hpp"

#include <cstdio>
#include <sstream>

namespace bia {

namespace {

template <class T>
std::string join(const std::vector<T>& values, char sep) {
  std::ostringstream out;
  for (std::size_t n = 0; n < values.size(); ++n) out << (n ? std::string(1, sep) : "") << values[n];
  return out.str();
}

std::string quoted(const std::string& s) { return '"' + s + '"'; }

std::string number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void candidate_columns(std::ostringstream& out, const std::optional<Candidate>& c) {
  if (!c) {
    out << "0,1,0,infeasible";
    return;
  }
  out << c->dof.numerator() << ',' << c->dof.denominator() << ',' << format_decimal(c->dof) << ','
      << quoted(c->config.canonical());
}

}  // namespace

std::string format_budget(const Budget& budget) { return budget ? std::to_string(*budget) : "inf"; }

std::string render_alignment_csv(const AlignmentReport& report, const GroupingConfig& config,
                                 std::uint64_t seed, std::size_t coherence) {
  std::ostringstream out;
  out << "# bia-alignment v1 config=" << config.canonical() << " seed=" << seed
      << " coherence=" << coherence << '\n';
  out << "receiver,desired,iui,igi,joint,interference,pred_desired,pred_iui,pred_igi,pred_joint,"
         "pred_interference,per_tx,pred_per_tx,match\n";
  for (const auto& r : report.receivers) {
    out << quoted(config.label(r.receiver)) << ',' << r.desired << ',' << r.iui << ',' << r.igi << ','
        << r.joint << ',' << r.interference << ',' << r.predicted.desired << ',' << r.predicted.iui
        << ',' << r.predicted.igi << ',' << r.predicted_joint() << ','
        << r.predicted.interference() << ',' << join(r.per_transmitter, ';') << ','
        << join(r.predicted_per_transmitter, ';') << ',' << (r.matches() ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string render_channel_dump(const ChannelSet& channels, const GroupingConfig& config) {
  std::ostringstream out;
  out << "# bia-channels v1 config=" << config.canonical() << " seed=" << channels.seed()
      << " coherence=" << channels.coherence() << " blocks=" << channels.blocks() << '\n';
  out << "block,rx,tx,mode,antenna,re,im\n";
  for (std::size_t b = 0; b < channels.blocks(); ++b)
    for (std::size_t rx = 0; rx < channels.users(); ++rx)
      for (std::size_t tx = 0; tx < channels.users(); ++tx) {
        const auto& h = channels.gains(b, rx, tx);
        for (Eigen::Index m = 0; m < h.rows(); ++m)
          for (Eigen::Index a = 0; a < h.cols(); ++a)
            out << b << ',' << quoted(config.label(rx)) << ',' << quoted(config.label(tx)) << ',' << m + 1 << ','
                << a + 1 << ',' << number(h(m, a).real()) << ',' << number(h(m, a).imag()) << '\n';
      }
  return out.str();
}

std::string render_sweep_csv(const SweepResult& result, const SearchSpace& space) {
  bool verified = false;
  for (const auto& r : result.rows) verified = verified || r.verified.has_value();

  std::ostringstream out;
  out << "# bia-sweep v1 modes=" << join(space.equipped, ',')
      << " reduction=" << (space.mode_reduction ? "on" : "off")
      << " grouped_min_kg=" << (space.require_grouping ? 2 : 1) << '\n';
  out << "L,conv_dof_num,conv_dof_den,conv_dof_dec,conv_config,grp_dof_num,grp_dof_den,grp_dof_dec,"
         "grp_config"
      << (verified ? ",verified" : "") << '\n';
  for (const auto& r : result.rows) {
    out << format_budget(r.budget) << ',';
    candidate_columns(out, r.conventional);
    out << ',';
    candidate_columns(out, r.grouped);
    if (verified) out << ',' << (r.verified.value_or(false) ? "true" : "false");
    out << '\n';
  }
  return out.str();
}

}  // namespace bia
