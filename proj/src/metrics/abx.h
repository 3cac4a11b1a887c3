// src/metrics/abx.h

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

#ifndef PHONACQ_METRICS_ABX_H_
#define PHONACQ_METRICS_ABX_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "metrics/embedding.h"

namespace phonacq {

/// Directed error: over all (a, x in A with a != x, b in B), the fraction
/// with d(x, b) < d(x, a), ties counting one half.  Points are rows;
/// Euclidean distance.  Needs |A| >= 2 and |B| >= 1.
double AbxDirectedError(const Eigen::MatrixXd &a, const Eigen::MatrixXd &b);

/// Symmetrized error (e(A,B) + e(B,A)) / 2.  When one class is a singleton
/// only the direction that is defined contributes; two singletons throw
/// kInsufficientData.
double AbxError(const Eigen::MatrixXd &a, const Eigen::MatrixXd &b);

struct AbxPairResult {
  std::string phone_a;
  std::string phone_b;
  double error = 0.0;
  size_t n_a = 0;
  size_t n_b = 0;
};

struct AbxOptions {
  double trim_fraction = 0.005;
  // Tokens per phone are subsampled to at most this many (0 = no cap).
  size_t max_tokens_per_phone = 3000;
  uint64_t seed = 0;
};

struct AbxReport {
  std::vector<AbxPairResult> pairs;
  size_t skipped_pairs = 0;  // a phone had fewer than two tokens
  size_t n_embeddings = 0;   // after trimming
  double mean = 0.0;
  double sd = 0.0;  // sample sd over pairs

  std::vector<double> Errors() const;
};

/// Trims outliers, z-scores the whole set, then evaluates every listed pair.
AbxReport AbxAllPairs(const EmbeddingSet &set,
                      const std::vector<std::pair<std::string, std::string>> &pairs,
                      const AbxOptions &opts = {});

/// Writes `phone_a,phone_b,error,n_a,n_b` with a header row.
void WriteAbxCsv(const AbxReport &report, const std::string &path);

}  // namespace phonacq

#endif  // PHONACQ_METRICS_ABX_H_
