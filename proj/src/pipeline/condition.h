// src/pipeline/condition.h

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

#ifndef PHONACQ_PIPELINE_CONDITION_H_
#define PHONACQ_PIPELINE_CONDITION_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "corpus/manifest.h"
#include "inventory/inventory.h"
#include "metrics/abx.h"
#include "metrics/embedding.h"
#include "metrics/hcv.h"
#include "nnet/checkpoint.h"
#include "pipeline/experiment-config.h"

namespace phonacq {

struct EncodedTokens {
  EmbeddingSet embeddings;
  std::map<std::string, size_t> unknown_labels;  // excluded, label -> count
  size_t skipped_tokens = 0;                     // tokens covering no frame
};

/// Encodes every phone token of `entries` with the checkpoint's front end,
/// normalizer and encoder.  With an inventory, tokens whose label it lacks
/// are excluded and counted; the others take their phoneme/allophone status
/// from it.  `cache_dir` may be empty.
EncodedTokens EncodeTokens(const Checkpoint &ckpt, const std::vector<ManifestEntry> &entries,
                           const std::string &cache_dir, const FeatureSystem *inventory);

struct ContrastResult {
  std::string feature;
  Category category = Category::kConsonant;
  std::vector<std::string> plus;
  std::vector<std::string> minus;
  size_t n_plus = 0;  // tokens used, after trimming and subsampling
  size_t n_minus = 0;
  bool evaluated = false;  // false when a class has too few tokens
  double silhouette = 0.0;
  double hit_rate = 0.0;
};

struct ConditionReport {
  std::string tag;
  std::string language;
  size_t n_embeddings = 0;  // labeled embeddings entering the metrics
  std::map<std::string, size_t> unknown_labels;
  int k = 0;
  size_t n_clustered = 0;
  HcvScores hcv;
  HcvScores baseline;
  AbxReport abx;
  size_t n_contrast_embeddings = 0;  // after trimming, for silhouette and hit rate
  std::vector<ContrastResult> contrasts;
};

/// Metrics for one grid cell, computed from the embeddings alone:
/// k-means (k = min(kmeans_k, n)) on the raw vectors with HCV and a random
/// baseline; ABX over every within-category inventory pair; and for each
/// minimal contrast, silhouette and Hotelling hit rate on trimmed, min-max
/// scaled vectors with per-class subsampling.  Throws kEmptyInput for an
/// empty set.
ConditionReport EvaluateCondition(const std::string &tag, const EmbeddingSet &embeddings,
                                  const FeatureSystem &inventory, const MetricConfig &cfg,
                                  uint64_t seed);

/// Encode + evaluate.  Uses the evaluation split, or the whole manifest when
/// no entry is marked as evaluation.
ConditionReport RunCondition(const std::string &tag, const Checkpoint &ckpt,
                             const DatasetManifest &eval_manifest,
                             const FeatureSystem &inventory, const MetricConfig &cfg,
                             const std::string &cache_dir, uint64_t seed,
                             EmbeddingSet *embeddings_out = nullptr);

nlohmann::ordered_json ConditionReportToJson(const ConditionReport &r);

/// CSV, full precision: feature,category,plus,minus,n_plus,n_minus,evaluated,
/// silhouette,hit_rate.  Class members are joined with spaces.
void WriteContrastCsv(const ConditionReport &r, const std::string &path);

/// Human-readable summary, rounded to 3 decimals.
std::string FormatConditionSummary(const ConditionReport &r);

/// Writes report.json, abx.csv, contrasts.csv, summary.txt and, when given,
/// embeddings.csv into `dir` (created if needed).
void WriteConditionOutputs(const ConditionReport &r, const EmbeddingSet *embeddings,
                           const std::string &dir);

void WriteTextFile(const std::string &text, const std::string &path);
void EnsureDirectory(const std::string &dir);

}  // namespace phonacq

#endif  // PHONACQ_PIPELINE_CONDITION_H_
