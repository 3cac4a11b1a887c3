// src/metrics/normalize.cc

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

#include "metrics/normalize.h"

#include <algorithm>
#include <cmath>

#include "base/error.h"

namespace phonacq {

double Percentile(std::vector<double> values, double q) {
  if (values.empty()) Fail(ErrorCode::kEmptyInput, "percentile of an empty sample");
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const size_t lo = static_cast<size_t>(std::floor(pos));
  const size_t hi = std::min(lo + 1, values.size() - 1);
  const double w = pos - static_cast<double>(lo);
  return values[lo] + w * (values[hi] - values[lo]);
}

EmbeddingSet TrimOutliers(const EmbeddingSet &set, double fraction) {
  if (fraction < 0.0 || fraction >= 0.5)
    Fail(ErrorCode::kInvalidArgument, "trim fraction must be in [0, 0.5)");
  if (set.empty() || fraction == 0.0) return set;
  const Eigen::Index dims = set[0].vector.size();
  std::vector<double> lo(dims), hi(dims);
  std::vector<double> column(set.size());
  for (Eigen::Index d = 0; d < dims; ++d) {
    for (size_t i = 0; i < set.size(); ++i) column[i] = set[i].vector[d];
    lo[d] = Percentile(column, fraction);
    hi[d] = Percentile(column, 1.0 - fraction);
  }
  EmbeddingSet out;
  for (const auto &e : set) {
    bool keep = true;
    for (Eigen::Index d = 0; d < dims && keep; ++d)
      keep = e.vector[d] >= lo[d] && e.vector[d] <= hi[d];
    if (keep) out.push_back(e);
  }
  return out;
}

EmbeddingSet ZscoreNormalize(const EmbeddingSet &set, NormStats *stats) {
  if (set.empty()) Fail(ErrorCode::kEmptyInput, "cannot z-score an empty set");
  const Eigen::MatrixXd x = ToMatrix(set);
  NormStats s;
  s.mean = x.colwise().mean().transpose();
  s.sd = ((x.rowwise() - s.mean.transpose()).array().square().colwise().sum() /
          static_cast<double>(x.rows()))
             .sqrt()
             .transpose();
  s.degenerate.assign(static_cast<size_t>(x.cols()), false);
  EmbeddingSet out = set;
  for (Eigen::Index d = 0; d < x.cols(); ++d) {
    if (!(s.sd[d] > 0.0)) {
      s.degenerate[static_cast<size_t>(d)] = true;
      continue;
    }
    for (auto &e : out) e.vector[d] = (e.vector[d] - s.mean[d]) / s.sd[d];
  }
  if (stats) *stats = std::move(s);
  return out;
}

EmbeddingSet MinmaxNormalize(const EmbeddingSet &set) {
  if (set.empty()) return set;
  const Eigen::MatrixXd x = ToMatrix(set);
  const Eigen::VectorXd mn = x.colwise().minCoeff().transpose();
  const Eigen::VectorXd mx = x.colwise().maxCoeff().transpose();
  for (Eigen::Index d = 0; d < x.cols(); ++d)
    if (!(mx[d] > mn[d]))
      Fail(ErrorCode::kDegenerate,
           "min-max normalization: dimension " + std::to_string(d) + " is constant");
  EmbeddingSet out = set;
  for (auto &e : out)
    for (Eigen::Index d = 0; d < x.cols(); ++d)
      e.vector[d] = 2.0 * (e.vector[d] - mn[d]) / (mx[d] - mn[d]) - 1.0;
  return out;
}

}  // namespace phonacq
