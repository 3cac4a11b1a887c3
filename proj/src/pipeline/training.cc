// src/pipeline/training.cc

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

#include "pipeline/training.h"

#include <fstream>

#include "base/error.h"
#include "base/log.h"
#include "base/random.h"

namespace phonacq {

PreparedTraining PrepareTraining(const DatasetManifest &manifest, const FeatureConfig &feats,
                                 const std::string &cache_dir, size_t n_segments,
                                 uint64_t seed) {
  const auto train_entries = manifest.EntriesIn(Split::kTrain);
  if (train_entries.empty())
    Fail(ErrorCode::kEmptyInput, "manifest has no training recordings");
  const SplitData train = LoadSplit(train_entries, feats, cache_dir);
  const SplitData val = LoadSplit(manifest.EntriesIn(Split::kValidation), feats, cache_dir);

  PreparedTraining p;
  p.length_stats = EstimateLengthStats(train.alignments);
  if (n_segments == 0) n_segments = DefaultSegmentCount(train.recordings, p.length_stats);
  auto train_segs = SampleTrainingSegments(train.recordings, p.length_stats, n_segments,
                                           DeriveSeed(seed, "segments"));
  std::vector<Segment> val_segs;
  if (!val.recordings.empty())
    val_segs = SampleTrainingSegments(val.recordings, p.length_stats,
                                      DefaultSegmentCount(val.recordings, p.length_stats),
                                      DeriveSeed(seed, "val-segments"));
  p.normalizer = InputNormalizer::Fit(train_segs);
  p.normalizer.Apply(&train_segs);
  p.normalizer.Apply(&val_segs);
  p.train = PackSegments(train_segs);
  p.val = PackSegments(val_segs);
  PHONACQ_VLOG(1) << manifest.language << ": " << p.train.Size() << " training and "
                  << p.val.Size() << " validation segments, mean length "
                  << p.length_stats.mean_frames << " frames";
  return p;
}

TrainingRun TrainOnPrepared(const PreparedTraining &data, const FeatureConfig &feats,
                            ModelConfig model, TrainConfig train, uint64_t seed) {
  model.init_seed = DeriveSeed(seed, "init");
  train.shuffle_seed = DeriveSeed(seed, "shuffle");
  TrainResult r = Train(InitModel<float>(model), data.train, data.val, train);
  TrainingRun run;
  run.checkpoint.params = std::move(r.best_params);
  run.checkpoint.normalizer = data.normalizer;
  run.checkpoint.features = feats;
  run.history = std::move(r.history);
  run.n_train_segments = static_cast<size_t>(data.train.Size());
  run.n_val_segments = static_cast<size_t>(data.val.Size());
  return run;
}

TrainingRun TrainLanguage(const DatasetManifest &manifest, const FeatureConfig &feats,
                          const std::string &cache_dir, const ModelConfig &model,
                          const TrainConfig &train, size_t n_segments, uint64_t seed) {
  const PreparedTraining data = PrepareTraining(manifest, feats, cache_dir, n_segments, seed);
  return TrainOnPrepared(data, feats, model, train, seed);
}

void WriteHistoryJson(const TrainHistory &h, const std::string &path) {
  nlohmann::ordered_json j;
  j["best_epoch"] = h.best_epoch;
  j["train_loss"] = h.train_loss;
  j["val_loss"] = h.val_loss;
  std::ofstream os(path);
  os << j.dump(2) << "\n";
  if (!os) Fail(ErrorCode::kUnwritable, "cannot write " + path);
}

}  // namespace phonacq
