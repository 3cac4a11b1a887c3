// src/corpus/manifest.cc

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

#include "corpus/manifest.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include "base/error.h"
#include "base/random.h"
#include "json.hpp"

namespace phonacq {

namespace fs = std::filesystem;
using nlohmann::json;

const char *SplitName(Split s) {
  switch (s) {
    case Split::kTrain: return "train";
    case Split::kValidation: return "validation";
    case Split::kEvaluation: return "evaluation";
  }
  return "?";
}

Split SplitFromName(const std::string &name) {
  if (name == "train") return Split::kTrain;
  if (name == "validation") return Split::kValidation;
  if (name == "evaluation") return Split::kEvaluation;
  Fail(ErrorCode::kParse, "unknown split '" + name + "'");
}

std::vector<ManifestEntry> DatasetManifest::EntriesIn(Split s) const {
  std::vector<ManifestEntry> out;
  for (const auto &e : entries)
    if (e.split == s) out.push_back(e);
  return out;
}

SplitCounts DefaultSplitCounts(const std::string &language) {
  if (language == "mandarin" || language == "zh" || language == "cmn")
    return {40, 8, 16};
  return {25, 5, 10};
}

void ValidateManifest(const DatasetManifest &m) {
  std::set<std::string> ids, audio;
  std::map<std::string, Split> speaker_split;
  for (const auto &e : m.entries) {
    if (e.recording_id.empty() || e.audio_path.empty())
      Fail(ErrorCode::kParse, "manifest entry without recording id or audio path");
    if (e.alignment_path.empty())
      Fail(ErrorCode::kParse, "recording " + e.recording_id + " has no alignment");
    if (!ids.insert(e.recording_id).second)
      Fail(ErrorCode::kParse, "duplicate recording id " + e.recording_id);
    if (!audio.insert(e.audio_path).second)
      Fail(ErrorCode::kParse, "audio file listed twice: " + e.audio_path);
    auto [it, fresh] = speaker_split.emplace(e.speaker_id, e.split);
    if (!fresh && it->second != e.split)
      Fail(ErrorCode::kSplitOverlap,
           "speaker " + e.speaker_id + " appears in both " +
               SplitName(it->second) + " and " + SplitName(e.split));
  }
}

void AssignSplitsBySpeaker(DatasetManifest *m, const SplitCounts &counts,
                           uint64_t seed) {
  std::vector<std::string> speakers;
  for (const auto &e : m->entries) speakers.push_back(e.speaker_id);
  std::sort(speakers.begin(), speakers.end());
  speakers.erase(std::unique(speakers.begin(), speakers.end()), speakers.end());
  if (speakers.empty()) return;

  Rng rng(seed);
  auto order = rng.SampleWithoutReplacement(speakers.size(), speakers.size());

  const int total = counts.train + counts.validation + counts.evaluation;
  int n_train = counts.train, n_val = counts.validation;
  const int n = static_cast<int>(speakers.size());
  if (n < total) {
    n_val = counts.validation * n / total;
    int n_eval = counts.evaluation * n / total;
    n_train = std::max(1, n - n_val - n_eval);
  }
  std::map<std::string, Split> assign;
  for (int i = 0; i < n; ++i) {
    Split s = i < n_train ? Split::kTrain
              : i < n_train + n_val ? Split::kValidation
                                    : Split::kEvaluation;
    assign[speakers[order[i]]] = s;
  }
  for (auto &e : m->entries) e.split = assign[e.speaker_id];
}

DatasetManifest ReadManifest(const std::string &path) {
  std::ifstream is(path);
  if (!is) Fail(ErrorCode::kMissingFile, "cannot open manifest " + path);
  json j;
  try {
    is >> j;
  } catch (const json::exception &e) {
    Fail(ErrorCode::kParse, path + ": " + e.what());
  }
  const fs::path base = fs::path(path).parent_path();
  auto resolve = [&](const std::string &p) {
    fs::path fp(p);
    return fp.is_absolute() || base.empty() ? fp.string() : (base / fp).string();
  };
  DatasetManifest m;
  try {
    m.language = j.value("language", "");
    for (const auto &je : j.at("entries")) {
      ManifestEntry e;
      e.recording_id = je.at("recording_id").get<std::string>();
      e.audio_path = resolve(je.at("audio_path").get<std::string>());
      e.alignment_path = resolve(je.at("alignment_path").get<std::string>());
      e.speaker_id = je.at("speaker_id").get<std::string>();
      e.split = SplitFromName(je.at("split").get<std::string>());
      m.entries.push_back(std::move(e));
    }
  } catch (const json::exception &e) {
    Fail(ErrorCode::kParse, path + ": " + e.what());
  }
  ValidateManifest(m);
  return m;
}

void WriteManifest(const DatasetManifest &m, const std::string &path) {
  json j;
  j["language"] = m.language;
  j["entries"] = json::array();
  for (const auto &e : m.entries) {
    j["entries"].push_back({{"recording_id", e.recording_id},
                            {"audio_path", e.audio_path},
                            {"alignment_path", e.alignment_path},
                            {"speaker_id", e.speaker_id},
                            {"split", SplitName(e.split)}});
  }
  std::ofstream os(path);
  if (!os) Fail(ErrorCode::kUnwritable, "cannot write " + path);
  os << j.dump(2) << '\n';
}

}  // namespace phonacq
