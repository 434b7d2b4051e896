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

#include <Eigen/Dense>

namespace bia {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Relative factor in the rank threshold max(rows, cols) * sigma_max * kRankEpsilon.
inline constexpr double kRankEpsilon = 1e-10;

/// Number of singular values above max(rows, cols) * sigma_max * 1e-10.
std::size_t numerical_rank(const ComplexMatrix& a);

/// Orthonormal basis of the column space, using the same threshold.
ComplexMatrix column_basis(const ComplexMatrix& a);

/// Horizontal concatenation.
ComplexMatrix hstack(const ComplexMatrix& left, const ComplexMatrix& right);

}  // namespace bia
