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

#include <string>

#include "bia/channel.hpp"
#include "bia/grouping.hpp"
#include "bia/optimizer.hpp"
#include "bia/signal.hpp"

namespace bia {

// Every format starts with a "# bia-<kind> v1 ..." comment line. Columns are
// comma separated with a header row, which gnuplot reads with
// `set datafile separator ","`.

/// receiver,desired,iui,igi,joint,interference,pred_desired,pred_iui,pred_igi,
/// pred_joint,pred_interference,per_tx,pred_per_tx,match
std::string render_alignment_csv(const AlignmentReport& report, const GroupingConfig& config,
                                 std::uint64_t seed, std::size_t coherence);

/// block,rx,tx,mode,antenna,re,im with %.17g values, keyed by seed.
std::string render_channel_dump(const ChannelSet& channels, const GroupingConfig& config);

/// L,conv_dof_num,conv_dof_den,conv_dof_dec,conv_config,
/// grp_dof_num,grp_dof_den,grp_dof_dec,grp_config[,verified]
/// Unbounded budgets print as "inf"; infeasible entries as 0,1,0,infeasible.
std::string render_sweep_csv(const SweepResult& result, const SearchSpace& space);

std::string format_budget(const Budget& budget);

}  // namespace bia
