// src/metrics/hcv.cc

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

#include "metrics/hcv.h"

#include <cmath>
#include <map>
#include <unordered_map>

#include "base/error.h"
#include "base/random.h"

namespace phonacq {

std::vector<int> EncodeLabels(const std::vector<std::string> &labels) {
  std::unordered_map<std::string, int> ids;
  std::vector<int> out;
  out.reserve(labels.size());
  for (const auto &l : labels) {
    auto [it, fresh] = ids.emplace(l, static_cast<int>(ids.size()));
    out.push_back(it->second);
  }
  return out;
}

namespace {

double Entropy(const std::map<int, double> &counts, double n) {
  double h = 0.0;
  for (const auto &[k, c] : counts)
    if (c > 0) h -= (c / n) * std::log(c / n);
  return h;
}

}  // namespace

HcvScores Hcv(const std::vector<int> &classes, const std::vector<int> &clusters) {
  if (classes.size() != clusters.size())
    Fail(ErrorCode::kDimensionMismatch, "hcv: label vectors differ in length");
  if (classes.empty()) Fail(ErrorCode::kEmptyInput, "hcv: no labels");
  const double n = static_cast<double>(classes.size());
  std::map<int, double> class_count, cluster_count;
  std::map<std::pair<int, int>, double> joint;
  for (size_t i = 0; i < classes.size(); ++i) {
    class_count[classes[i]] += 1;
    cluster_count[clusters[i]] += 1;
    joint[{classes[i], clusters[i]}] += 1;
  }
  const double h_c = Entropy(class_count, n);
  const double h_k = Entropy(cluster_count, n);
  double h_c_given_k = 0.0, h_k_given_c = 0.0;
  for (const auto &[key, nck] : joint) {
    const auto [c, k] = key;
    h_c_given_k -= (nck / n) * std::log(nck / cluster_count[k]);
    h_k_given_c -= (nck / n) * std::log(nck / class_count[c]);
  }
  HcvScores s;
  s.homogeneity = h_c == 0.0 ? 1.0 : 1.0 - h_c_given_k / h_c;
  s.completeness = h_k == 0.0 ? 1.0 : 1.0 - h_k_given_c / h_k;
  const double sum = s.homogeneity + s.completeness;
  s.v_measure = sum == 0.0 ? 0.0 : 2.0 * s.homogeneity * s.completeness / sum;
  return s;
}

HcvScores Hcv(const std::vector<std::string> &classes, const std::vector<int> &clusters) {
  return Hcv(EncodeLabels(classes), clusters);
}

HcvScores RandomBaselineHcv(const std::vector<std::string> &classes, int k, uint64_t seed) {
  if (classes.empty()) Fail(ErrorCode::kEmptyInput, "baseline: no labels");
  if (k < 1) Fail(ErrorCode::kInvalidArgument, "baseline: k must be positive");
  Rng rng(seed);
  std::vector<int> clusters(classes.size());
  for (auto &c : clusters) c = static_cast<int>(rng.UniformInt(static_cast<uint64_t>(k)));
  return Hcv(classes, clusters);
}

}  // namespace phonacq
