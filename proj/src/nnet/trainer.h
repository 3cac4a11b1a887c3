// src/nnet/trainer.h

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

#ifndef PHONACQ_NNET_TRAINER_H_
#define PHONACQ_NNET_TRAINER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "nnet/adam.h"
#include "nnet/autoencoder.h"
#include "metrics/embedding.h"
#include "segments/segments.h"

namespace phonacq {

struct TrainConfig {
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  int epochs = 100;
  int batch_size = 256;
  uint64_t shuffle_seed = 0;

  void Check() const;
  AdamOptions Adam() const { return {learning_rate, beta1, beta2, epsilon}; }
};

TrainConfig ReadTrainConfig(const std::string &path);
/// Missing keys keep their defaults.
TrainConfig TrainConfigFromJson(const nlohmann::json &j);

struct TrainHistory {
  std::vector<double> train_loss;  // per-epoch mean over all samples
  std::vector<double> val_loss;    // full pass after each epoch
  int best_epoch = -1;             // argmin of val_loss (0-based)
};

/// Per-column z-scoring of the 39 input coefficients, fitted on training
/// segments and applied identically to inputs and (through the shared static
/// columns) targets.  Columns with zero spread are only centred.
struct InputNormalizer {
  Eigen::RowVectorXf mean;
  Eigen::RowVectorXf sd;

  bool Empty() const { return mean.size() == 0; }
  static InputNormalizer Fit(const std::vector<Segment> &segments);
  void Apply(Segment *seg) const;
  void Apply(std::vector<Segment> *segs) const;
};

struct Dataset {
  FloatMatrix inputs;   // N x 975
  FloatMatrix targets;  // N x 325

  Eigen::Index Size() const { return inputs.rows(); }
};

/// Flattens segments row-major (frame-major) into a dataset.
Dataset PackSegments(const std::vector<Segment> &segments);

struct TrainResult {
  ModelParams final_params;
  ModelParams best_params;
  TrainHistory history;
};

/// Minibatch Adam on mean squared reconstruction error.  Each epoch uses a
/// fresh permutation derived from cfg.shuffle_seed and the epoch index.
/// With an empty validation set the training loss drives best-epoch
/// selection.  Throws kEmptyInput for an empty training set.
TrainResult Train(const ModelParams &init, const Dataset &train, const Dataset &val,
                  const TrainConfig &cfg);

/// Mean squared error over a whole dataset, evaluated in batches.
double EvaluateLoss(const ModelParams &params, const Dataset &data, int batch_size = 1024);

/// Hidden vectors for already-normalized segments, in input order.
FloatMatrix EncodeSegments(const ModelParams &params, const std::vector<Segment> &segments);

/// Same as EncodeSegments, paired with each segment's label (empty when the
/// segment is unlabeled).
EmbeddingSet Encode(const ModelParams &params, const std::vector<Segment> &segments);

}  // namespace phonacq

#endif  // PHONACQ_NNET_TRAINER_H_
