// src/feat/mfcc.h

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

#ifndef PHONACQ_FEAT_MFCC_H_
#define PHONACQ_FEAT_MFCC_H_

#include <Eigen/Core>

#include "json.hpp"
#include "corpus/audio.h"
#include "feat/frame-matrix.h"

namespace phonacq {

/// MFCC front-end settings.  Defaults are the common python_speech_features
/// ones: 25 ms Hamming windows every 10 ms, 26 mel filters over a 512-point
/// FFT, 13 cepstra, preemphasis 0.97.
struct FeatureConfig {
  double win_len_s = 0.025;
  double step_s = 0.010;
  int n_mfcc = 13;
  int n_mel_filters = 26;
  int fft_size = 512;
  double preemphasis = 0.97;
  double fmin = 0.0;
  double fmax = 0.0;  // <= 0 means sample_rate / 2

  int WindowSamples(int sample_rate) const;
  int StepSamples(int sample_rate) const;
  void Check(int sample_rate) const;
};

FeatureConfig ReadFeatureConfig(const std::string &path);
/// Missing keys keep their defaults.
FeatureConfig FeatureConfigFromJson(const nlohmann::json &j);

/// 1 + floor((n - win) / step), or 0 when the audio is shorter than a window.
Eigen::Index NumFrames(size_t n_samples, int sample_rate, const FeatureConfig &cfg);

/// Triangular filters, n_mel_filters x (fft_size/2 + 1).
Eigen::MatrixXd MelFilterbank(const FeatureConfig &cfg, int sample_rate);

/// Orthonormal DCT-II, rows = output coefficients.
Eigen::MatrixXd DctMatrix(int n_out, int n_in);

/// Per-frame mel filter energies before the log (T x n_mel_filters).
Eigen::MatrixXd ComputeMelEnergies(const AudioBuffer &buf, const FeatureConfig &cfg);

/// T x n_mfcc static cepstra.  Coefficient 0 is kept and no liftering is
/// applied.  Throws kShortAudio if the buffer is shorter than one window.
FrameMatrix ComputeMfcc(const AudioBuffer &buf, const FeatureConfig &cfg);

/// Appends first and second differences: delta_t = c_t - c_{t-1},
/// delta2_t = delta_t - delta_{t-1}, both zero at t = 0.  Output columns are
/// [static | delta | delta2].
FrameMatrix AppendDynamics(const FrameMatrix &static_feats);

FrameMatrix ExtractFeatures(const AudioBuffer &buf, const FeatureConfig &cfg);

}  // namespace phonacq

#endif  // PHONACQ_FEAT_MFCC_H_
