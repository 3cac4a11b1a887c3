// src/metrics/silhouette.cc

// Copyright 2026  The phonacq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "metrics/silhouette.h"

#include <algorithm>
#include <limits>

#include "base/error.h"

namespace phonacq {

namespace {

double ClassSum(const Eigen::MatrixXd &own, const Eigen::MatrixXd &other) {
  const Eigen::Index n = own.rows(), m = other.rows();
  double total = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (n == 1) continue;  // singleton convention
    double in = 0.0, out = 0.0;
    for (Eigen::Index j = 0; j < n; ++j)
      if (j != i) in += (own.row(i) - own.row(j)).norm();
    for (Eigen::Index j = 0; j < m; ++j) out += (own.row(i) - other.row(j)).norm();
    const double a = in / static_cast<double>(n - 1);
    const double b = out / static_cast<double>(m);
    const double denom = std::max(a, b);
    total += denom > 0.0 ? (b - a) / denom : 0.0;
  }
  return total;
}

}  // namespace

double SilhouettePair(const Eigen::MatrixXd &a, const Eigen::MatrixXd &b) {
  if (a.rows() == 0 || b.rows() == 0)
    Fail(ErrorCode::kEmptyInput, "silhouette: empty class");
  return (ClassSum(a, b) + ClassSum(b, a)) / static_cast<double>(a.rows() + b.rows());
}

Eigen::MatrixXd SilhouetteMatrix(const std::vector<Eigen::MatrixXd> &classes) {
  const auto n = static_cast<Eigen::Index>(classes.size());
  if (n < 2) Fail(ErrorCode::kInsufficientData, "silhouette matrix needs two classes");
  Eigen::MatrixXd m = Eigen::MatrixXd::Constant(n, n, std::numeric_limits<double>::quiet_NaN());
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      m(i, j) = m(j, i) = SilhouettePair(classes[static_cast<size_t>(i)],
                                         classes[static_cast<size_t>(j)]);
  return m;
}

}  // namespace phonacq
