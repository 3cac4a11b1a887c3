// src/feat/mfcc.cc

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

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <numbers>

#include "base/error.h"
#include "json.hpp"

namespace phonacq {

namespace {

double HzToMel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }
double MelToHz(double mel) { return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0); }

constexpr double kEnergyFloor = 1e-10;

// Real-input power spectrum of fixed size.
class PowerSpectrum {
 public:
  explicit PowerSpectrum(int n) : n_(n) {
    in_ = fftw_alloc_real(n);
    out_ = fftw_alloc_complex(n / 2 + 1);
    plan_ = fftw_plan_dft_r2c_1d(n, in_, out_, FFTW_ESTIMATE);
  }
  ~PowerSpectrum() {
    fftw_destroy_plan(plan_);
    fftw_free(in_);
    fftw_free(out_);
  }
  PowerSpectrum(const PowerSpectrum &) = delete;
  PowerSpectrum &operator=(const PowerSpectrum &) = delete;

  double *input() { return in_; }

  // Computes |X_k|^2 / n for k = 0..n/2 into `power`.
  void Compute(double *power) {
    fftw_execute(plan_);
    for (int k = 0; k <= n_ / 2; ++k)
      power[k] = (out_[k][0] * out_[k][0] + out_[k][1] * out_[k][1]) / n_;
  }

 private:
  int n_;
  double *in_;
  fftw_complex *out_;
  fftw_plan plan_;
};

}  // namespace

int FeatureConfig::WindowSamples(int sample_rate) const {
  return static_cast<int>(std::lround(win_len_s * sample_rate));
}

int FeatureConfig::StepSamples(int sample_rate) const {
  return static_cast<int>(std::lround(step_s * sample_rate));
}

void FeatureConfig::Check(int sample_rate) const {
  if (sample_rate <= 0) Fail(ErrorCode::kInvalidArgument, "bad sample rate");
  if (WindowSamples(sample_rate) < 1 || StepSamples(sample_rate) < 1)
    Fail(ErrorCode::kInvalidArgument, "window and step must cover at least one sample");
  if (fft_size < WindowSamples(sample_rate))
    Fail(ErrorCode::kInvalidArgument, "fft_size smaller than the analysis window");
  if (n_mfcc < 1 || n_mfcc > n_mel_filters)
    Fail(ErrorCode::kInvalidArgument, "need 1 <= n_mfcc <= n_mel_filters");
  if (preemphasis < 0.0 || preemphasis >= 1.0)
    Fail(ErrorCode::kInvalidArgument, "preemphasis must be in [0, 1)");
  const double hi = fmax > 0.0 ? fmax : sample_rate / 2.0;
  if (fmin < 0.0 || hi <= fmin || hi > sample_rate / 2.0)
    Fail(ErrorCode::kInvalidArgument, "bad mel frequency range");
}

FeatureConfig FeatureConfigFromJson(const nlohmann::json &j) {
  FeatureConfig c;
  c.win_len_s = j.value("win_len_s", c.win_len_s);
  c.step_s = j.value("step_s", c.step_s);
  c.n_mfcc = j.value("n_mfcc", c.n_mfcc);
  c.n_mel_filters = j.value("n_mel_filters", c.n_mel_filters);
  c.fft_size = j.value("fft_size", c.fft_size);
  c.preemphasis = j.value("preemphasis", c.preemphasis);
  c.fmin = j.value("fmin", c.fmin);
  c.fmax = j.value("fmax", c.fmax);
  return c;
}

FeatureConfig ReadFeatureConfig(const std::string &path) {
  std::ifstream is(path);
  if (!is) Fail(ErrorCode::kMissingFile, "cannot open " + path);
  try {
    return FeatureConfigFromJson(nlohmann::json::parse(is));
  } catch (const nlohmann::json::exception &e) {
    Fail(ErrorCode::kParse, path + ": " + e.what());
  }
}

Eigen::Index NumFrames(size_t n_samples, int sample_rate, const FeatureConfig &cfg) {
  const size_t win = cfg.WindowSamples(sample_rate);
  const size_t step = cfg.StepSamples(sample_rate);
  if (n_samples < win) return 0;
  return static_cast<Eigen::Index>(1 + (n_samples - win) / step);
}

Eigen::MatrixXd MelFilterbank(const FeatureConfig &cfg, int sample_rate) {
  const int n_bins = cfg.fft_size / 2 + 1;
  const int nf = cfg.n_mel_filters;
  const double hi = cfg.fmax > 0.0 ? cfg.fmax : sample_rate / 2.0;
  const double mel_lo = HzToMel(cfg.fmin), mel_hi = HzToMel(hi);
  std::vector<int> bin(nf + 2);
  for (int i = 0; i < nf + 2; ++i) {
    double mel = mel_lo + (mel_hi - mel_lo) * i / (nf + 1);
    bin[i] = static_cast<int>(std::floor((cfg.fft_size + 1) * MelToHz(mel) / sample_rate));
  }
  Eigen::MatrixXd fb = Eigen::MatrixXd::Zero(nf, n_bins);
  for (int j = 0; j < nf; ++j) {
    const int l = bin[j], c = bin[j + 1], r = bin[j + 2];
    for (int i = l; i < c && i < n_bins; ++i)
      fb(j, i) = static_cast<double>(i - l) / (c - l);
    for (int i = c; i < r && i < n_bins; ++i)
      fb(j, i) = static_cast<double>(r - i) / (r - c);
  }
  return fb;
}

Eigen::MatrixXd DctMatrix(int n_out, int n_in) {
  Eigen::MatrixXd d(n_out, n_in);
  const double pi = std::numbers::pi;
  for (int k = 0; k < n_out; ++k) {
    const double scale = std::sqrt((k == 0 ? 1.0 : 2.0) / n_in);
    for (int n = 0; n < n_in; ++n)
      d(k, n) = scale * std::cos(pi * k * (2 * n + 1) / (2.0 * n_in));
  }
  return d;
}

Eigen::MatrixXd ComputeMelEnergies(const AudioBuffer &buf, const FeatureConfig &cfg) {
  cfg.Check(buf.sample_rate);
  const Eigen::Index n_frames = NumFrames(buf.samples.size(), buf.sample_rate, cfg);
  if (n_frames == 0)
    Fail(ErrorCode::kShortAudio,
         "audio '" + buf.source_id + "' is shorter than one analysis window");
  const int win = cfg.WindowSamples(buf.sample_rate);
  const int step = cfg.StepSamples(buf.sample_rate);
  const int n_bins = cfg.fft_size / 2 + 1;

  std::vector<double> emph(buf.samples.size());
  emph[0] = buf.samples[0];
  for (size_t i = 1; i < emph.size(); ++i)
    emph[i] = buf.samples[i] - cfg.preemphasis * buf.samples[i - 1];

  std::vector<double> window(win);
  const double pi = std::numbers::pi;
  for (int i = 0; i < win; ++i)
    window[i] = win == 1 ? 1.0 : 0.54 - 0.46 * std::cos(2.0 * pi * i / (win - 1));

  const Eigen::MatrixXd fb = MelFilterbank(cfg, buf.sample_rate);
  PowerSpectrum fft(cfg.fft_size);
  Eigen::VectorXd power(n_bins);
  Eigen::MatrixXd energies(n_frames, cfg.n_mel_filters);
  double *in = fft.input();
  for (Eigen::Index t = 0; t < n_frames; ++t) {
    const size_t off = static_cast<size_t>(t) * step;
    for (int i = 0; i < win; ++i) in[i] = emph[off + i] * window[i];
    std::fill(in + win, in + cfg.fft_size, 0.0);
    fft.Compute(power.data());
    energies.row(t) = (fb * power).transpose();
  }
  return energies;
}

FrameMatrix ComputeMfcc(const AudioBuffer &buf, const FeatureConfig &cfg) {
  Eigen::MatrixXd logmel = ComputeMelEnergies(buf, cfg)
                               .unaryExpr([](double e) { return std::log(std::max(e, kEnergyFloor)); });
  const Eigen::MatrixXd dct = DctMatrix(cfg.n_mfcc, cfg.n_mel_filters);
  FrameMatrix fm;
  fm.frame_rate = static_cast<float>(1.0 / cfg.step_s);
  fm.data.resize(logmel.rows(), cfg.n_mfcc);
  // Frame by frame, so equal log-mel rows give equal cepstra.
  Eigen::VectorXd c(cfg.n_mfcc);
  for (Eigen::Index t = 0; t < logmel.rows(); ++t) {
    c.noalias() = dct * logmel.row(t).transpose();
    fm.data.row(t) = c.transpose().cast<float>();
  }
  return fm;
}

FrameMatrix AppendDynamics(const FrameMatrix &in) {
  const Eigen::Index T = in.NumFrames(), C = in.NumCoeffs();
  if (T < 1) Fail(ErrorCode::kEmptyInput, "cannot append dynamics to an empty matrix");
  FrameMatrix out;
  out.frame_rate = in.frame_rate;
  out.data = FloatMatrix::Zero(T, 3 * C);
  out.data.leftCols(C) = in.data;
  for (Eigen::Index t = 1; t < T; ++t)
    out.data.row(t).segment(C, C) = in.data.row(t) - in.data.row(t - 1);
  for (Eigen::Index t = 1; t < T; ++t)
    out.data.row(t).segment(2 * C, C) =
        out.data.row(t).segment(C, C) - out.data.row(t - 1).segment(C, C);
  return out;
}

FrameMatrix ExtractFeatures(const AudioBuffer &buf, const FeatureConfig &cfg) {
  return AppendDynamics(ComputeMfcc(buf, cfg));
}

}  // namespace phonacq
