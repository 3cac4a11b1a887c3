// src/metrics/embedding.h

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

#ifndef PHONACQ_METRICS_EMBEDDING_H_
#define PHONACQ_METRICS_EMBEDDING_H_

#include <string>
#include <vector>

#include <Eigen/Core>

namespace phonacq {

enum class PhoneStatus { kPhoneme, kAllophone };

/// A hidden vector with its ground-truth label; the unit of evaluation.
struct LabeledEmbedding {
  Eigen::VectorXd vector;
  std::string label;
  PhoneStatus status = PhoneStatus::kPhoneme;
};

using EmbeddingSet = std::vector<LabeledEmbedding>;

/// Points stacked as rows.
Eigen::MatrixXd ToMatrix(const EmbeddingSet &set);
std::vector<std::string> Labels(const EmbeddingSet &set);
/// Members carrying `label`, in order.
EmbeddingSet WithLabel(const EmbeddingSet &set, const std::string &label);

const char *PhoneStatusName(PhoneStatus s);

/// CSV with header `label,status,d0,...,d{H-1}`; values printed with 17
/// significant digits so a read-back reproduces them exactly.
void WriteEmbeddingsCsv(const EmbeddingSet &set, const std::string &path);
EmbeddingSet ReadEmbeddingsCsv(const std::string &path);

}  // namespace phonacq

#endif  // PHONACQ_METRICS_EMBEDDING_H_
