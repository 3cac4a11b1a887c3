// src/pipeline/corpus-features.h

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

#ifndef PHONACQ_PIPELINE_CORPUS_FEATURES_H_
#define PHONACQ_PIPELINE_CORPUS_FEATURES_H_

#include <string>
#include <vector>

#include "corpus/alignment.h"
#include "corpus/manifest.h"
#include "feat/mfcc.h"
#include "segments/segments.h"

namespace phonacq {

// Audio is brought to this rate before feature extraction.
inline constexpr int kFeatureSampleRate = 16000;

nlohmann::json FeatureConfigToJson(const FeatureConfig &cfg);

/// Load, resample and featurize one recording (T x 39).
FrameMatrix ComputeRecordingFeatures(const ManifestEntry &entry, const FeatureConfig &cfg);

/// Cache layout: <dir>/features.json holds the front-end settings and
/// <dir>/<recording_id>.phnf the features.  A cache built with other
/// settings is refused (kVersionMismatch).
void PrepareCache(const std::string &cache_dir, const FeatureConfig &cfg);
FeatureConfig ReadCacheConfig(const std::string &cache_dir);
std::string CachePath(const std::string &cache_dir, const std::string &recording_id);

/// Cached features if present, otherwise computed (and stored when
/// `cache_dir` is non-empty; PrepareCache must have been called).
FrameMatrix LoadFeatures(const ManifestEntry &entry, const FeatureConfig &cfg,
                         const std::string &cache_dir);

/// Featurizes every entry into the cache; returns the number of recordings
/// computed (cached ones are skipped).
size_t ExtractToCache(const DatasetManifest &manifest, const FeatureConfig &cfg,
                      const std::string &cache_dir);

struct SplitData {
  std::vector<RecordingFeatures> recordings;
  std::vector<std::vector<AlignedToken>> alignments;  // parallel to recordings
};

SplitData LoadSplit(const std::vector<ManifestEntry> &entries, const FeatureConfig &cfg,
                    const std::string &cache_dir);

/// Entries of the evaluation split, or every entry when none is marked.
std::vector<ManifestEntry> EvaluationEntries(const DatasetManifest &manifest);

}  // namespace phonacq

#endif  // PHONACQ_PIPELINE_CORPUS_FEATURES_H_
