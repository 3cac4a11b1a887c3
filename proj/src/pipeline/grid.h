// src/pipeline/grid.h

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

#ifndef PHONACQ_PIPELINE_GRID_H_
#define PHONACQ_PIPELINE_GRID_H_

#include <string>
#include <vector>

#include "metrics/stat-tests.h"
#include "nnet/trainer.h"
#include "pipeline/condition.h"
#include "pipeline/experiment-config.h"

namespace phonacq {

struct ConditionComparison {
  std::string a;
  std::string b;
  double mean_a = 0.0;
  double mean_b = 0.0;
  size_t n_a = 0;
  size_t n_b = 0;
  bool valid = false;  // both sides had at least two pair errors
  WelchResult welch;
};

/// Welch test over per-pair ABX errors.
ConditionComparison CompareAbx(const std::string &a, const std::vector<double> &errors_a,
                               const std::string &b, const std::vector<double> &errors_b);

struct GridReport {
  std::vector<std::string> languages;
  std::vector<TrainHistory> histories;    // parallel to languages
  std::vector<ConditionReport> cells;     // L0L0, L0L1, L1L1, L1L0
  std::vector<ConditionComparison> comparisons;  // all 6 cell pairs
  ConditionComparison pooled;             // exposed vs foreign
};

/// Trains one model per language, then evaluates each model on both
/// languages' evaluation sets.  Cell tags are train tag + eval tag.  Needs
/// exactly two languages.  When `out_dir` is non-empty every artefact is
/// written there: checkpoints, histories, one directory per cell,
/// comparisons.csv, grid.json and summary.txt.
GridReport RunGrid(const ExperimentConfig &cfg, const std::string &out_dir);

nlohmann::ordered_json GridReportToJson(const GridReport &g);
void WriteComparisonsCsv(const GridReport &g, const std::string &path);
std::string FormatGridSummary(const GridReport &g);

struct DimSearchEntry {
  int hidden_dim = 0;
  int best_epoch = -1;
  double best_val_loss = 0.0;
  size_t n_embeddings = 0;
  int k = 0;
  HcvScores hcv;
};

struct DimSearchReport {
  std::string language;
  int epochs = 0;
  std::vector<DimSearchEntry> entries;
};

/// For each H, trains on the first language for `epochs`, keeps the
/// lowest-validation-loss epoch, encodes the labeled validation tokens and
/// scores k-means clusters against the labels.  Training segments are shared
/// across H.
DimSearchReport DimSearch(const ExperimentConfig &cfg, const std::vector<int> &hidden_dims,
                          int epochs);

void WriteDimSearchCsv(const DimSearchReport &r, const std::string &path);
nlohmann::ordered_json DimSearchToJson(const DimSearchReport &r);

}  // namespace phonacq

#endif  // PHONACQ_PIPELINE_GRID_H_
