// src/pipeline/experiment-config.h

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

#ifndef PHONACQ_PIPELINE_EXPERIMENT_CONFIG_H_
#define PHONACQ_PIPELINE_EXPERIMENT_CONFIG_H_

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "feat/mfcc.h"
#include "nnet/autoencoder.h"
#include "nnet/trainer.h"

namespace phonacq {

struct MetricConfig {
  int kmeans_k = 256;
  int kmeans_max_iterations = 300;
  double trim_fraction = 0.005;
  size_t max_tokens_per_phone = 3000;  // ABX
  size_t max_tokens_per_class = 3000;  // silhouette, hit rate
  int hit_rate_trials = 500;
  int hit_rate_samples = 25;
  double alpha = 0.05;
  // Features whose contrasts are scored; empty means every inventory feature.
  std::vector<std::string> contrast_features;
  void Check() const;
};

MetricConfig MetricConfigFromJson(const nlohmann::json &j);

struct LanguageConfig {
  std::string tag;            // short name used in condition tags ("E", "M")
  std::string manifest;       // training and validation splits
  std::string eval_manifest;  // evaluation split; empty means `manifest`
  std::string inventory;
  const std::string &EvalManifest() const {
    return eval_manifest.empty() ? manifest : eval_manifest;
  }
};

struct ExperimentConfig {
  std::vector<LanguageConfig> languages;
  FeatureConfig features;
  ModelConfig model;
  TrainConfig train;
  MetricConfig metrics;
  uint64_t seed = 0;
  std::string output_dir;
  std::string cache_dir;      // empty: <output_dir>/cache; one subdirectory per language
  size_t train_segments = 0;  // 0: about one pass over the training audio
  std::string CacheDir() const;
  /// Feature cache of one language.  Recording ids are only unique within
  /// a manifest.
  std::string LanguageCacheDir(const std::string &tag) const;
  /// Throws kMissingFile when a referenced manifest or inventory is absent.
  void Check() const;
};

/// JSON experiment file.  Relative paths are resolved against the file's
/// directory.  Sections "features", "model", "train" and "metrics" hold the
/// corresponding settings inline.
ExperimentConfig ReadExperimentConfig(const std::string &path);

}  // namespace phonacq

#endif  // PHONACQ_PIPELINE_EXPERIMENT_CONFIG_H_
