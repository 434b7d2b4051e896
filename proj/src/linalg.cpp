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

#include "bia/linalg.hpp"

#include <algorithm>
#include <complex>
#include <stdexcept>
#include <string>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace bia {

namespace {

struct Svd {
  Eigen::VectorXd values;
  ComplexMatrix u;  // thin left singular vectors when requested
};

// LAPACK zgesvd: Eigen 3.4's divide-and-conquer SVD returns NaNs on the
// exactly repeated singular values that aligned blocks produce.
Svd svd(const ComplexMatrix& a, bool want_u) {
  const auto m = static_cast<lapack_int>(a.rows()), n = static_cast<lapack_int>(a.cols());
  const auto k = std::min(m, n);
  ComplexMatrix work = a;
  Svd out{Eigen::VectorXd(k), want_u ? ComplexMatrix(m, k) : ComplexMatrix()};
  Eigen::VectorXd superb(std::max<lapack_int>(k - 1, 1));
  const lapack_int info = LAPACKE_zgesvd(
      LAPACK_COL_MAJOR, want_u ? 'S' : 'N', 'N', m, n, work.data(), m, out.values.data(),
      want_u ? out.u.data() : nullptr, want_u ? m : 1, nullptr, 1, superb.data());
  if (info != 0) throw std::runtime_error("zgesvd failed with info " + std::to_string(info));
  return out;
}

std::size_t count_above(const Eigen::VectorXd& sv, Eigen::Index rows, Eigen::Index cols) {
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double tol = static_cast<double>(std::max(rows, cols)) * sv(0) * kRankEpsilon;
  std::size_t r = 0;
  while (r < static_cast<std::size_t>(sv.size()) && sv(static_cast<Eigen::Index>(r)) > tol) ++r;
  return r;
}

}  // namespace

std::size_t numerical_rank(const ComplexMatrix& a) {
  if (a.size() == 0) return 0;
  return count_above(svd(a, false).values, a.rows(), a.cols());
}

ComplexMatrix column_basis(const ComplexMatrix& a) {
  if (a.size() == 0) return ComplexMatrix(a.rows(), 0);
  auto s = svd(a, true);
  const auto r = static_cast<Eigen::Index>(count_above(s.values, a.rows(), a.cols()));
  return s.u.leftCols(r);
}

ComplexMatrix hstack(const ComplexMatrix& left, const ComplexMatrix& right) {
  if (left.cols() == 0) return right;
  if (right.cols() == 0) return left;
  ComplexMatrix out(left.rows(), left.cols() + right.cols());
  out << left, right;
  return out;
}

}  // namespace bia
