// src/metrics/normalize.h

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

#ifndef PHONACQ_METRICS_NORMALIZE_H_
#define PHONACQ_METRICS_NORMALIZE_H_

#include <vector>

#include <Eigen/Core>

#include "metrics/embedding.h"

namespace phonacq {

/// Linear-interpolation percentile (q in [0, 1]) of unsorted values.
double Percentile(std::vector<double> values, double q);

/// Drops every point that has some coordinate below the `fraction` or above
/// the 1 - `fraction` percentile of that coordinate.
EmbeddingSet TrimOutliers(const EmbeddingSet &set, double fraction = 0.005);

struct NormStats {
  Eigen::VectorXd mean;
  Eigen::VectorXd sd;               // population sd
  std::vector<bool> degenerate;     // sd == 0: dimension passed through
};

/// Per-dimension (x - mean) / sd.  Zero-spread dimensions are left as they
/// are and flagged.  Throws kEmptyInput on an empty set.
EmbeddingSet ZscoreNormalize(const EmbeddingSet &set, NormStats *stats = nullptr);

/// Per-dimension 2 (x - min) / (max - min) - 1.  Throws kDegenerate when a
/// dimension is constant.
EmbeddingSet MinmaxNormalize(const EmbeddingSet &set);

}  // namespace phonacq

#endif  // PHONACQ_METRICS_NORMALIZE_H_
