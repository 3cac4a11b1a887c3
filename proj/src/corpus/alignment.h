// src/corpus/alignment.h

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

#ifndef PHONACQ_CORPUS_ALIGNMENT_H_
#define PHONACQ_CORPUS_ALIGNMENT_H_

#include <string>
#include <vector>

namespace phonacq {

enum class Tier { kPhone, kSilence, kNoise };

inline constexpr const char *kSilenceLabel = "SIL";
inline constexpr const char *kNoiseLabel = "NOISE";

struct AlignedToken {
  std::string label;
  double start_s = 0.0;
  double end_s = 0.0;
  Tier tier = Tier::kPhone;
};

/// Parses `start<TAB>end<TAB>label` lines.  Blank lines are ignored.  The
/// result is sorted by start time; reversed or overlapping intervals are
/// errors (kReversedInterval / kOverlappingInterval), as is any line that
/// does not parse (kParse, message carries the 1-based line number).
std::vector<AlignedToken> ParseAlignment(const std::string &path);
std::vector<AlignedToken> ParseAlignmentText(const std::string &text,
                                             const std::string &origin = "<text>");

void WriteAlignment(const std::vector<AlignedToken> &tokens,
                    const std::string &path);

Tier TierForLabel(const std::string &label);

}  // namespace phonacq

#endif  // PHONACQ_CORPUS_ALIGNMENT_H_
