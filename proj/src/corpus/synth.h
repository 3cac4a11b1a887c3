// src/corpus/synth.h

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

#ifndef PHONACQ_CORPUS_SYNTH_H_
#define PHONACQ_CORPUS_SYNTH_H_

#include <cstdint>
#include <string>
#include <vector>

#include "corpus/manifest.h"

namespace phonacq {

/// One synthetic "phone": a sinusoid mixture plus white noise.
struct SynthClass {
  std::string label;
  std::vector<double> frequencies_hz;
  double noise_fraction = 0.0;  // 0 = pure tone mixture, 1 = pure noise
  double mean_duration_s = 0.1;
  double duration_sd_s = 0.02;
  // Per-class overrides of the corpus-wide settings; negative means inherit.
  double frequency_jitter = -1.0;
  double min_gain = -1.0;
};

struct SynthSpec {
  std::string language = "synthetic";
  std::vector<SynthClass> classes;
  int n_utterances = 0;
  int tokens_per_utterance = 10;
  double silence_gap_s = 0.05;
  int sample_rate = 16000;
  uint64_t seed = 0;
  int n_speakers = 10;
  // Speakers per split, scaled down if n_speakers is smaller.
  SplitCounts split_speakers{6, 2, 2};
  // Per-token relative sd of each component frequency.
  double frequency_jitter = 0.02;
  double amplitude = 0.5;
  // Token gain is amplitude * U(min_gain, 1).
  double min_gain = 0.6;
  // Sd of white background noise added to the whole utterance.
  double noise_floor = 0.0;
  double min_duration_s = 0.03;
  // Token durations and gaps are rounded to multiples of this (0: 1 ms).
  double time_step_s = 0.0;

  void Check() const;
};

SynthSpec ReadSynthSpec(const std::string &path);
void WriteSynthSpec(const SynthSpec &spec, const std::string &path);

/// Renders the corpus into `out_dir`: wav/<id>.wav and align/<id>.tsv per
/// utterance.  Paths in the returned manifest are relative to `out_dir`, so
/// writing it as out_dir/manifest.json gives a relocatable corpus.  Output is
/// a pure function of `spec`.  Nothing is written for zero utterances.
DatasetManifest SynthesizeCorpus(const SynthSpec &spec, const std::string &out_dir);

}  // namespace phonacq

#endif  // PHONACQ_CORPUS_SYNTH_H_
