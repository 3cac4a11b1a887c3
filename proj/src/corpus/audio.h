// src/corpus/audio.h

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

#ifndef PHONACQ_CORPUS_AUDIO_H_
#define PHONACQ_CORPUS_AUDIO_H_

#include <string>
#include <vector>

namespace phonacq {

/// Mono audio with amplitudes nominally in [-1, 1].
struct AudioBuffer {
  std::vector<float> samples;
  int sample_rate = 16000;
  std::string source_id;

  double DurationSeconds() const {
    return static_cast<double>(samples.size()) / sample_rate;
  }
};

/// Reads a RIFF/WAVE file with 16-bit PCM samples.  Multichannel files are
/// averaged down to mono; samples are scaled by 1/32768.
///
/// Throws Error with kMissingFile, kMalformedHeader or kUnsupportedEncoding.
AudioBuffer LoadWav(const std::string &path);

/// Writes mono 16-bit PCM, clipping to the representable range.
void WriteWav(const AudioBuffer &buf, const std::string &path);

/// Writes interleaved multichannel PCM16 (used to build test fixtures).
void WriteWavPcm16(const std::vector<std::vector<int16_t>> &channels,
                   int sample_rate, const std::string &path);

struct ResampleOptions {
  // Half-width of the windowed-sinc kernel, in zero crossings of the lower
  // of the two rates.
  int zero_crossings = 32;
  // Passband edge as a fraction of the lower Nyquist frequency.
  double cutoff = 0.95;
};

/// Windowed-sinc (Blackman) sample-rate conversion.  Output length is
/// round(n * target / source).  Kernel weights are renormalised per output
/// sample and the input is edge-clamped, so constant signals pass through
/// unchanged all the way to the ends.
AudioBuffer ResampleAudio(const AudioBuffer &buf, int target_rate,
                          const ResampleOptions &opts = {});

}  // namespace phonacq

#endif  // PHONACQ_CORPUS_AUDIO_H_
