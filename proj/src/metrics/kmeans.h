// src/metrics/kmeans.h

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

#ifndef PHONACQ_METRICS_KMEANS_H_
#define PHONACQ_METRICS_KMEANS_H_

#include <cstdint>
#include <vector>

#include <Eigen/Core>

namespace phonacq {

struct KMeansOptions {
  int k = 256;
  int max_iterations = 300;
  uint64_t seed = 0;
};

struct KMeansResult {
  std::vector<int> assignments;
  Eigen::MatrixXd centroids;            // k x d
  std::vector<double> inertia_history;  // after each assignment step
  double inertia = 0.0;
  int iterations = 0;
};

/// k-means++ seeding followed by Lloyd iterations until no assignment
/// changes or max_iterations is reached.  A cluster that empties is moved to
/// the point farthest from its current centroid.  Points are rows.  Throws
/// kInsufficientData when there are fewer points than clusters.
KMeansResult KMeans(const Eigen::MatrixXd &points, const KMeansOptions &opts);

}  // namespace phonacq

#endif  // PHONACQ_METRICS_KMEANS_H_
