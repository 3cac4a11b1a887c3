// src/pipeline/training.h

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

#ifndef PHONACQ_PIPELINE_TRAINING_H_
#define PHONACQ_PIPELINE_TRAINING_H_

#include <cstdint>
#include <string>
#include <vector>

#include "corpus/manifest.h"
#include "nnet/checkpoint.h"
#include "nnet/trainer.h"
#include "pipeline/corpus-features.h"

namespace phonacq {

/// Normalized training and validation data for one language.
struct PreparedTraining {
  Dataset train;
  Dataset val;
  InputNormalizer normalizer;
  SegmentLengthStats length_stats;
};

/// Samples context-free segments from the train split (count 0 means one
/// pass over the audio) and from the validation split (one pass), fits the
/// normalizer on the training segments and applies it to both.
PreparedTraining PrepareTraining(const DatasetManifest &manifest, const FeatureConfig &feats,
                                 const std::string &cache_dir, size_t n_segments,
                                 uint64_t seed);

struct TrainingRun {
  Checkpoint checkpoint;  // lowest-validation-loss epoch
  TrainHistory history;
  size_t n_train_segments = 0;
  size_t n_val_segments = 0;
};

/// Child seeds: "init" for the weights, "shuffle" for minibatch order and
/// "segments" for sampling; the seed fields of `model` and `train` are
/// replaced.
TrainingRun TrainOnPrepared(const PreparedTraining &data, const FeatureConfig &feats,
                            ModelConfig model, TrainConfig train, uint64_t seed);

TrainingRun TrainLanguage(const DatasetManifest &manifest, const FeatureConfig &feats,
                          const std::string &cache_dir, const ModelConfig &model,
                          const TrainConfig &train, size_t n_segments, uint64_t seed);

void WriteHistoryJson(const TrainHistory &history, const std::string &path);

}  // namespace phonacq

#endif  // PHONACQ_PIPELINE_TRAINING_H_
