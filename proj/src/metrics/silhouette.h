// src/metrics/silhouette.h

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

#ifndef PHONACQ_METRICS_SILHOUETTE_H_
#define PHONACQ_METRICS_SILHOUETTE_H_

#include <vector>

#include <Eigen/Core>

namespace phonacq {

/// Mean silhouette over the points of two classes (rows).  For a point,
/// a = mean distance to the rest of its class, b = mean distance to the other
/// class, s = (b - a) / max(a, b); members of a singleton class score 0.
/// Throws kEmptyInput if either class is empty.
double SilhouettePair(const Eigen::MatrixXd &a, const Eigen::MatrixXd &b);

/// Symmetric matrix of SilhouettePair over all class pairs; the diagonal is
/// NaN.  Needs at least two classes.
Eigen::MatrixXd SilhouetteMatrix(const std::vector<Eigen::MatrixXd> &classes);

}  // namespace phonacq

#endif  // PHONACQ_METRICS_SILHOUETTE_H_
