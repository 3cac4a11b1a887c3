// src/feat/mfcc-test.cc

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

#include "feat/mfcc.h"

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "base/error.h"
#include "base/random.h"

namespace phonacq {

static AudioBuffer Sine(double hz, size_t n, int rate = 16000, double amp = 0.5) {
  AudioBuffer b;
  b.sample_rate = rate;
  b.samples.resize(n);
  for (size_t i = 0; i < n; ++i)
    b.samples[i] = static_cast<float>(amp * std::sin(2.0 * std::numbers::pi * hz * i / rate));
  return b;
}

static AudioBuffer Noise(size_t n, uint64_t seed) {
  AudioBuffer b;
  b.samples.resize(n);
  Rng rng(seed);
  for (auto &s : b.samples) s = static_cast<float>(0.1 * rng.Normal());
  return b;
}

TEST_CASE("compute_mfcc: one second at 16 kHz gives 98 frames") {
  FeatureConfig cfg;
  AudioBuffer b = Noise(16000, 1);
  FrameMatrix m = ComputeMfcc(b, cfg);
  CHECK(m.NumFrames() == 98);
  CHECK(m.NumCoeffs() == 13);
  CHECK(m.frame_rate == doctest::Approx(100.0));
  FrameMatrix x = ExtractFeatures(b, cfg);
  CHECK(x.NumFrames() == 98);
  CHECK(x.NumCoeffs() == 39);
  CHECK(x.data.leftCols(13) == m.data);
  CHECK(x.data.allFinite());
}

TEST_CASE("frame count formula over many lengths") {
  FeatureConfig cfg;
  for (size_t n : {400ul, 401ul, 559ul, 560ul, 561ul, 1000ul, 4321ul, 16000ul, 32017ul}) {
    AudioBuffer b = Noise(n, n);
    const Eigen::Index expect = 1 + static_cast<Eigen::Index>((n - 400) / 160);
    CHECK(ComputeMfcc(b, cfg).NumFrames() == expect);
    CHECK(NumFrames(n, 16000, cfg) == expect);
  }
  CHECK(NumFrames(399, 16000, cfg) == 0);
}

TEST_CASE("compute_mfcc: short audio is an error") {
  FeatureConfig cfg;
  AudioBuffer b = Noise(399, 3);
  try {
    ComputeMfcc(b, cfg);
    FAIL("expected an error");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kShortAudio);
  }
}

TEST_CASE("compute_mfcc: digital silence gives identical floor frames") {
  FeatureConfig cfg;
  AudioBuffer b;
  for (size_t n : {8000, 16000, 48000}) {
    b.samples.assign(n, 0.0f);
    FrameMatrix m = ComputeMfcc(b, cfg);
    for (Eigen::Index t = 1; t < m.NumFrames(); ++t) CHECK(m.data.row(t) == m.data.row(0));
  }
  FrameMatrix m = ComputeMfcc(b, cfg);
  // All log energies equal log(1e-10): only c0 is non-zero.
  CHECK(m.data(0, 0) == doctest::Approx(std::log(1e-10) * std::sqrt(26.0)).epsilon(1e-6));
  for (int k = 1; k < 13; ++k) CHECK(std::abs(m.data(0, k)) < 1e-3);
}

TEST_CASE("compute_mfcc: 440 Hz peak lies in a filter containing 440 Hz") {
  FeatureConfig cfg;
  Eigen::MatrixXd e = ComputeMelEnergies(Sine(440.0, 16000), cfg);
  // Independent filter edges from the mel scale.
  auto mel = [](double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); };
  auto hz = [](double m) { return 700.0 * (std::pow(10.0, m / 2595.0) - 1.0); };
  const double top = mel(8000.0), bin_hz = 16000.0 / 512;
  for (Eigen::Index t = 0; t < e.rows(); ++t) {
    Eigen::Index j;
    e.row(t).maxCoeff(&j);
    const double lo = hz(top * j / 27.0), hi = hz(top * (j + 2) / 27.0);
    CHECK(lo - bin_hz <= 440.0);
    CHECK(440.0 <= hi + bin_hz);
  }
}

TEST_CASE("DCT is orthonormal: inverse recovers log-mel energies") {
  FeatureConfig cfg;
  cfg.n_mfcc = 26;
  AudioBuffer b = Noise(4000, 9);
  Eigen::MatrixXd logmel = ComputeMelEnergies(b, cfg).array().max(1e-10).log().matrix();
  Eigen::MatrixXd d = DctMatrix(26, 26);
  CHECK((d * d.transpose() - Eigen::MatrixXd::Identity(26, 26)).cwiseAbs().maxCoeff() < 1e-12);
  FrameMatrix m = ComputeMfcc(b, cfg);
  Eigen::MatrixXd back = m.data.cast<double>() * d;
  // Cepstrum is stored as float; compare at float precision relative to magnitude.
  const double scale = logmel.cwiseAbs().maxCoeff();
  CHECK((back - logmel).cwiseAbs().maxCoeff() / scale < 1e-6);
  Eigen::MatrixXd exact = logmel * d.transpose() * d;
  CHECK((exact - logmel).cwiseAbs().maxCoeff() < 1e-6);
  // DCT-II reference value for one entry.
  CHECK(d(3, 5) == doctest::Approx(std::sqrt(2.0 / 26) * std::cos(std::numbers::pi * 3 * 11 / 52.0)));
}

TEST_CASE("feature extraction is deterministic") {
  FeatureConfig cfg;
  AudioBuffer b = Noise(12345, 5);
  FrameMatrix a = ExtractFeatures(b, cfg), c = ExtractFeatures(b, cfg);
  CHECK(a.data == c.data);
}

TEST_CASE("feature config validation") {
  FeatureConfig cfg;
  cfg.fft_size = 256;
  CHECK_THROWS_AS(cfg.Check(16000), Error);
  cfg = FeatureConfig();
  cfg.n_mfcc = 27;
  CHECK_THROWS_AS(cfg.Check(16000), Error);
  cfg = FeatureConfig();
  cfg.preemphasis = 1.0;
  CHECK_THROWS_AS(cfg.Check(16000), Error);
  cfg = FeatureConfig();
  CHECK_NOTHROW(cfg.Check(16000));
}

TEST_CASE("append_dynamics: constants give zero deltas") {
  FrameMatrix s;
  s.data = FloatMatrix::Constant(10, 13, 2.5f);
  FrameMatrix d = AppendDynamics(s);
  CHECK(d.NumCoeffs() == 39);
  CHECK(d.data.leftCols(13) == s.data);
  CHECK(d.data.rightCols(26).isZero(0.0f));
}

TEST_CASE("append_dynamics: ramp") {
  FrameMatrix s;
  s.data.resize(6, 1);
  for (int t = 0; t < 6; ++t) s.data(t, 0) = static_cast<float>(t);
  FrameMatrix d = AppendDynamics(s);
  const float delta[] = {0, 1, 1, 1, 1, 1}, delta2[] = {0, 1, 0, 0, 0, 0};
  for (int t = 0; t < 6; ++t) {
    CHECK(d.data(t, 1) == delta[t]);
    CHECK(d.data(t, 2) == delta2[t]);
  }
}

TEST_CASE("append_dynamics: single frame and empty input") {
  FrameMatrix s;
  s.data = FloatMatrix::Random(1, 13);
  FrameMatrix d = AppendDynamics(s);
  CHECK(d.NumFrames() == 1);
  CHECK(d.data.leftCols(13) == s.data);
  CHECK(d.data.rightCols(26).isZero(0.0f));
  FrameMatrix empty;
  empty.data.resize(0, 13);
  CHECK_THROWS_AS(AppendDynamics(empty), Error);
}

TEST_CASE("append_dynamics is linear") {
  FrameMatrix s;
  s.data = FloatMatrix::Random(20, 13);
  FrameMatrix scaled = s;
  scaled.data *= 4.0f;  // power of two keeps float arithmetic exact
  CHECK(AppendDynamics(scaled).data == 4.0f * AppendDynamics(s).data);
  FrameMatrix s3 = s;
  s3.data *= -0.37f;
  CHECK((AppendDynamics(s3).data - (-0.37f) * AppendDynamics(s).data).cwiseAbs().maxCoeff() < 1e-5f);
}

}  // namespace phonacq
