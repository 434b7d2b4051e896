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

#include <iosfwd>
#include <stdexcept>

#include "bia/exec.hpp"
#include "bia/grouping.hpp"
#include "run_config.hpp"

namespace bia::cli {

enum ExitCode : int { kOk = 0, kIoError = 1, kInvalidConfig = 2, kMismatch = 3, kInfeasible = 4 };

/// Thrown when no configuration fits the requested budget.
class Infeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Flat (--flat or no --groups), explicit groups, or the optimizer's pick
/// for `groups = "auto"` under the single budget in --L.
GroupingConfig resolve_config(const RunConfig& config, Exec exec = Exec::parallel);

// Each command writes its primary output to `out` (or to config.out when
// set) and diagnostics to `err`, and returns an ExitCode.
int cmd_pattern(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_dof(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace bia::cli
