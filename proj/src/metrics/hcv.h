// src/metrics/hcv.h

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

#ifndef PHONACQ_METRICS_HCV_H_
#define PHONACQ_METRICS_HCV_H_

#include <cstdint>
#include <string>
#include <vector>

namespace phonacq {

struct HcvScores {
  double homogeneity = 0.0;
  double completeness = 0.0;
  double v_measure = 0.0;
};

/// Homogeneity, completeness and V-measure (natural-log entropies).
/// h = 1 when the class entropy is zero, c = 1 when the cluster entropy is
/// zero, V = 0 when h + c = 0.  Throws kDimensionMismatch on unequal lengths
/// and kEmptyInput on empty input.
HcvScores Hcv(const std::vector<int> &classes, const std::vector<int> &clusters);
HcvScores Hcv(const std::vector<std::string> &classes, const std::vector<int> &clusters);

/// Hcv against uniformly random cluster ids in [0, k).
HcvScores RandomBaselineHcv(const std::vector<std::string> &classes, int k, uint64_t seed);

/// Maps string labels to dense ids in order of first appearance.
std::vector<int> EncodeLabels(const std::vector<std::string> &labels);

}  // namespace phonacq

#endif  // PHONACQ_METRICS_HCV_H_
