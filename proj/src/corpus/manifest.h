// src/corpus/manifest.h

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

#ifndef PHONACQ_CORPUS_MANIFEST_H_
#define PHONACQ_CORPUS_MANIFEST_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace phonacq {

enum class Split { kTrain, kValidation, kEvaluation };

const char *SplitName(Split s);
Split SplitFromName(const std::string &name);

struct ManifestEntry {
  std::string recording_id;
  std::string audio_path;
  std::string alignment_path;
  std::string speaker_id;
  Split split = Split::kTrain;
};

struct DatasetManifest {
  std::string language;
  std::vector<ManifestEntry> entries;

  std::vector<ManifestEntry> EntriesIn(Split s) const;
};

/// Speaker counts per split.  Defaults follow the training-speaker counts of
/// the two reference corpora with validation/evaluation sized to match.
struct SplitCounts {
  int train = 25;
  int validation = 5;
  int evaluation = 10;
};

SplitCounts DefaultSplitCounts(const std::string &language);

/// Checks that recording ids and audio paths are unique, every entry has an
/// alignment, and that no speaker appears in two splits (kSplitOverlap).
void ValidateManifest(const DatasetManifest &m);

/// Reassigns splits by speaker: speakers are shuffled with `seed` and dealt
/// out in the order train, validation, evaluation.  When there are fewer
/// speakers than requested the counts are scaled down proportionally, with at
/// least one training speaker.
void AssignSplitsBySpeaker(DatasetManifest *m, const SplitCounts &counts,
                           uint64_t seed);

/// JSON manifest.  Relative paths inside the file are resolved against the
/// manifest's own directory when reading.
DatasetManifest ReadManifest(const std::string &path);
void WriteManifest(const DatasetManifest &m, const std::string &path);

}  // namespace phonacq

#endif  // PHONACQ_CORPUS_MANIFEST_H_
