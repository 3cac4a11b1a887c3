// src/pipeline/corpus-features.cc

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

#include "pipeline/corpus-features.h"

#include <filesystem>
#include <fstream>

#include "base/error.h"
#include "base/log.h"
#include "corpus/audio.h"
#include "feat/feature-cache.h"

namespace phonacq {

namespace fs = std::filesystem;

nlohmann::json FeatureConfigToJson(const FeatureConfig &c) {
  nlohmann::ordered_json j;
  j["win_len_s"] = c.win_len_s;
  j["step_s"] = c.step_s;
  j["n_mfcc"] = c.n_mfcc;
  j["n_mel_filters"] = c.n_mel_filters;
  j["fft_size"] = c.fft_size;
  j["preemphasis"] = c.preemphasis;
  j["fmin"] = c.fmin;
  j["fmax"] = c.fmax;
  return nlohmann::json(j);
}

FrameMatrix ComputeRecordingFeatures(const ManifestEntry &entry, const FeatureConfig &cfg) {
  AudioBuffer audio = LoadWav(entry.audio_path);
  if (audio.sample_rate != kFeatureSampleRate)
    audio = ResampleAudio(audio, kFeatureSampleRate);
  return ExtractFeatures(audio, cfg);
}

std::string CachePath(const std::string &cache_dir, const std::string &recording_id) {
  return (fs::path(cache_dir) / (recording_id + ".phnf")).string();
}

FeatureConfig ReadCacheConfig(const std::string &cache_dir) {
  const std::string path = (fs::path(cache_dir) / "features.json").string();
  if (!fs::exists(path))
    Fail(ErrorCode::kMissingFile, "no feature cache at " + cache_dir + " (run extract first)");
  return ReadFeatureConfig(path);
}

void PrepareCache(const std::string &cache_dir, const FeatureConfig &cfg) {
  std::error_code ec;
  fs::create_directories(cache_dir, ec);
  if (ec) Fail(ErrorCode::kUnwritable, "cannot create " + cache_dir + ": " + ec.message());
  const std::string path = (fs::path(cache_dir) / "features.json").string();
  const nlohmann::json want = FeatureConfigToJson(cfg);
  if (fs::exists(path)) {
    if (FeatureConfigToJson(ReadFeatureConfig(path)) != want)
      Fail(ErrorCode::kVersionMismatch,
           cache_dir + " was built with different feature settings");
    return;
  }
  std::ofstream os(path);
  os << want.dump(2) << "\n";
  if (!os) Fail(ErrorCode::kUnwritable, "cannot write " + path);
}

FrameMatrix LoadFeatures(const ManifestEntry &entry, const FeatureConfig &cfg,
                         const std::string &cache_dir) {
  if (!cache_dir.empty()) {
    const std::string path = CachePath(cache_dir, entry.recording_id);
    if (fs::exists(path)) return ReadFeatureCache(path);
    FrameMatrix fm = ComputeRecordingFeatures(entry, cfg);
    WriteFeatureCache(fm, path);
    return fm;
  }
  return ComputeRecordingFeatures(entry, cfg);
}

size_t ExtractToCache(const DatasetManifest &manifest, const FeatureConfig &cfg,
                      const std::string &cache_dir) {
  PrepareCache(cache_dir, cfg);
  size_t computed = 0;
  for (const auto &e : manifest.entries) {
    const std::string path = CachePath(cache_dir, e.recording_id);
    if (fs::exists(path)) continue;
    WriteFeatureCache(ComputeRecordingFeatures(e, cfg), path);
    ++computed;
  }
  PHONACQ_VLOG(1) << "extracted " << computed << " of " << manifest.entries.size()
                  << " recordings into " << cache_dir;
  return computed;
}

SplitData LoadSplit(const std::vector<ManifestEntry> &entries, const FeatureConfig &cfg,
                    const std::string &cache_dir) {
  SplitData d;
  for (const auto &e : entries) {
    d.recordings.push_back({e.recording_id, LoadFeatures(e, cfg, cache_dir)});
    d.alignments.push_back(ParseAlignment(e.alignment_path));
  }
  return d;
}

std::vector<ManifestEntry> EvaluationEntries(const DatasetManifest &manifest) {
  auto eval = manifest.EntriesIn(Split::kEvaluation);
  return eval.empty() ? manifest.entries : eval;
}

}  // namespace phonacq
