// src/corpus/synth.cc

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

#include "corpus/synth.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "base/error.h"
#include "base/random.h"
#include "corpus/alignment.h"
#include "corpus/audio.h"
#include "json.hpp"

namespace phonacq {

namespace fs = std::filesystem;
using nlohmann::json;

void SynthSpec::Check() const {
  if (classes.empty() && n_utterances > 0)
    Fail(ErrorCode::kInvalidArgument, "synth spec has no classes");
  if (n_utterances < 0 || tokens_per_utterance < 1 || sample_rate <= 0 ||
      n_speakers < 1)
    Fail(ErrorCode::kInvalidArgument, "synth spec has non-positive counts");
  if (min_gain < 0.0 || min_gain > 1.0 || frequency_jitter < 0.0 || noise_floor < 0.0)
    Fail(ErrorCode::kInvalidArgument, "min_gain must be in [0,1] and jitter non-negative");
  if (silence_gap_s <= 0.0 || min_duration_s <= 0.0 || time_step_s < 0.0)
    Fail(ErrorCode::kInvalidArgument, "synth durations must be positive");
  for (const auto &c : classes) {
    if (c.label.empty() || c.label == kSilenceLabel || c.label == kNoiseLabel)
      Fail(ErrorCode::kInvalidArgument, "bad synth class label '" + c.label + "'");
    if (c.mean_duration_s <= 0.0 || c.duration_sd_s < 0.0)
      Fail(ErrorCode::kInvalidArgument, "class " + c.label + ": bad duration");
    if (c.noise_fraction < 0.0 || c.noise_fraction > 1.0)
      Fail(ErrorCode::kInvalidArgument, "class " + c.label + ": noise fraction outside [0,1]");
    if (c.min_gain > 1.0)
      Fail(ErrorCode::kInvalidArgument, "class " + c.label + ": min_gain above 1");
    if (c.frequencies_hz.empty() && c.noise_fraction < 1.0)
      Fail(ErrorCode::kInvalidArgument, "class " + c.label + ": no frequencies");
    for (double f : c.frequencies_hz)
      if (f <= 0.0 || f >= sample_rate / 2.0)
        Fail(ErrorCode::kInvalidArgument,
             "class " + c.label + ": frequency " + std::to_string(f) +
                 " Hz outside (0, Nyquist)");
  }
}

SynthSpec ReadSynthSpec(const std::string &path) {
  std::ifstream is(path);
  if (!is) Fail(ErrorCode::kMissingFile, "cannot open " + path);
  SynthSpec s;
  try {
    json j = json::parse(is);
    s.language = j.value("language", s.language);
    s.n_utterances = j.value("n_utterances", s.n_utterances);
    s.tokens_per_utterance = j.value("tokens_per_utterance", s.tokens_per_utterance);
    s.silence_gap_s = j.value("silence_gap_s", s.silence_gap_s);
    s.sample_rate = j.value("sample_rate", s.sample_rate);
    s.seed = j.value("seed", s.seed);
    s.n_speakers = j.value("n_speakers", s.n_speakers);
    s.frequency_jitter = j.value("frequency_jitter", s.frequency_jitter);
    s.amplitude = j.value("amplitude", s.amplitude);
    s.min_duration_s = j.value("min_duration_s", s.min_duration_s);
    s.min_gain = j.value("min_gain", s.min_gain);
    s.noise_floor = j.value("noise_floor", s.noise_floor);
    s.time_step_s = j.value("time_step_s", s.time_step_s);
    if (j.contains("split_speakers")) {
      const auto &sp = j["split_speakers"];
      s.split_speakers = {sp.at(0).get<int>(), sp.at(1).get<int>(), sp.at(2).get<int>()};
    }
    for (const auto &jc : j.at("classes")) {
      SynthClass c;
      c.label = jc.at("label").get<std::string>();
      c.frequencies_hz = jc.value("frequencies_hz", std::vector<double>{});
      c.noise_fraction = jc.value("noise_fraction", 0.0);
      c.mean_duration_s = jc.value("mean_duration_s", c.mean_duration_s);
      c.duration_sd_s = jc.value("duration_sd_s", c.duration_sd_s);
      c.frequency_jitter = jc.value("frequency_jitter", c.frequency_jitter);
      c.min_gain = jc.value("min_gain", c.min_gain);
      s.classes.push_back(std::move(c));
    }
  } catch (const json::exception &e) {
    Fail(ErrorCode::kParse, path + ": " + e.what());
  }
  s.Check();
  return s;
}

void WriteSynthSpec(const SynthSpec &s, const std::string &path) {
  json j;
  j["language"] = s.language;
  j["n_utterances"] = s.n_utterances;
  j["tokens_per_utterance"] = s.tokens_per_utterance;
  j["silence_gap_s"] = s.silence_gap_s;
  j["sample_rate"] = s.sample_rate;
  j["seed"] = s.seed;
  j["n_speakers"] = s.n_speakers;
  j["split_speakers"] = {s.split_speakers.train, s.split_speakers.validation,
                         s.split_speakers.evaluation};
  j["frequency_jitter"] = s.frequency_jitter;
  j["amplitude"] = s.amplitude;
  j["min_duration_s"] = s.min_duration_s;
  j["min_gain"] = s.min_gain;
  j["noise_floor"] = s.noise_floor;
  j["time_step_s"] = s.time_step_s;
  j["classes"] = json::array();
  for (const auto &c : s.classes)
    j["classes"].push_back({{"label", c.label},
                            {"frequencies_hz", c.frequencies_hz},
                            {"noise_fraction", c.noise_fraction},
                            {"mean_duration_s", c.mean_duration_s},
                            {"duration_sd_s", c.duration_sd_s},
                            {"frequency_jitter", c.frequency_jitter},
                            {"min_gain", c.min_gain}});
  std::ofstream os(path);
  if (!os) Fail(ErrorCode::kUnwritable, "cannot write " + path);
  os << j.dump(2) << '\n';
}

namespace {

// Token boundaries live on a 1 ms grid so that the TSV times are exact.
int64_t MsToSample(int64_t ms, int rate) {
  return (ms * rate + 500) / 1000;
}

void RenderToken(const SynthSpec &spec, const SynthClass &cls, Rng *rng,
                 float *out, size_t n) {
  const double pi = std::numbers::pi;
  const double rate = spec.sample_rate;
  std::vector<double> freq, phase;
  const double jitter = cls.frequency_jitter >= 0.0 ? cls.frequency_jitter : spec.frequency_jitter;
  const double min_gain = cls.min_gain >= 0.0 ? cls.min_gain : spec.min_gain;
  for (double f : cls.frequencies_hz) {
    double jittered = f * (1.0 + jitter * rng->Normal());
    freq.push_back(std::clamp(jittered, 1.0, rate / 2.0 - 1.0));
    phase.push_back(2.0 * pi * rng->Uniform());
  }
  const double gain = spec.amplitude * (min_gain + (1.0 - min_gain) * rng->Uniform());
  const size_t ramp = std::min(n / 2, static_cast<size_t>(0.005 * rate));
  const double tone_w = 1.0 - cls.noise_fraction;
  const double noise_w = cls.noise_fraction;
  const double tone_norm = freq.empty() ? 0.0 : 1.0 / freq.size();
  for (size_t i = 0; i < n; ++i) {
    const double t = i / rate;
    double tone = 0.0;
    for (size_t k = 0; k < freq.size(); ++k)
      tone += std::sin(2.0 * pi * freq[k] * t + phase[k]);
    tone *= tone_norm;
    // Gaussian noise at sd 1/3 keeps nearly all mass inside [-1, 1].
    const double noise = rng->Normal() / 3.0;
    double env = 1.0;
    if (i < ramp) env = 0.5 - 0.5 * std::cos(pi * i / ramp);
    else if (n - 1 - i < ramp) env = 0.5 - 0.5 * std::cos(pi * (n - 1 - i) / ramp);
    out[i] = static_cast<float>(gain * env * (tone_w * tone + noise_w * noise));
  }
}

}  // namespace

DatasetManifest SynthesizeCorpus(const SynthSpec &spec, const std::string &out_dir) {
  spec.Check();
  DatasetManifest manifest;
  manifest.language = spec.language;
  if (spec.n_utterances == 0) return manifest;

  std::error_code ec;
  fs::create_directories(fs::path(out_dir) / "wav", ec);
  fs::create_directories(fs::path(out_dir) / "align", ec);
  if (ec || !fs::is_directory(fs::path(out_dir) / "align"))
    Fail(ErrorCode::kUnwritable, "cannot create output directory " + out_dir);

  const int64_t step_ms = std::max<int64_t>(1, std::llround(spec.time_step_s * 1000.0));
  auto quantize = [step_ms](double s) {
    return std::max<int64_t>(1, std::llround(s * 1000.0 / step_ms)) * step_ms;
  };
  const int64_t gap_ms = quantize(spec.silence_gap_s);
  const int64_t min_ms = quantize(spec.min_duration_s);
  for (int u = 0; u < spec.n_utterances; ++u) {
    Rng rng(DeriveSeed(spec.seed, static_cast<uint64_t>(u)));
    char id[32];
    std::snprintf(id, sizeof(id), "utt%05d", u);

    struct Planned { size_t cls; int64_t start_ms, end_ms; };
    std::vector<Planned> plan;
    int64_t cursor = gap_ms;
    for (int k = 0; k < spec.tokens_per_utterance; ++k) {
      const size_t c = static_cast<size_t>(rng.UniformInt(spec.classes.size()));
      const auto &cls = spec.classes[c];
      double dur;
      do {
        dur = rng.Normal(cls.mean_duration_s, cls.duration_sd_s);
      } while (dur <= 0.0);
      const int64_t ms = std::max(min_ms, quantize(dur));
      plan.push_back({c, cursor, cursor + ms});
      cursor += ms + gap_ms;
    }

    AudioBuffer buf;
    buf.sample_rate = spec.sample_rate;
    buf.source_id = id;
    buf.samples.assign(static_cast<size_t>(MsToSample(cursor, spec.sample_rate)), 0.0f);
    std::vector<AlignedToken> tokens;
    int64_t prev_end = 0;
    for (const auto &p : plan) {
      tokens.push_back({kSilenceLabel, prev_end / 1000.0, p.start_ms / 1000.0, Tier::kSilence});
      const int64_t s0 = MsToSample(p.start_ms, spec.sample_rate);
      const int64_t s1 = MsToSample(p.end_ms, spec.sample_rate);
      RenderToken(spec, spec.classes[p.cls], &rng, buf.samples.data() + s0,
                  static_cast<size_t>(s1 - s0));
      tokens.push_back({spec.classes[p.cls].label, p.start_ms / 1000.0,
                        p.end_ms / 1000.0, Tier::kPhone});
      prev_end = p.end_ms;
    }
    tokens.push_back({kSilenceLabel, prev_end / 1000.0, cursor / 1000.0, Tier::kSilence});
    if (spec.noise_floor > 0.0)
      for (float &x : buf.samples) x += static_cast<float>(spec.noise_floor * rng.Normal());

    const std::string wav_rel = std::string("wav/") + id + ".wav";
    const std::string tsv_rel = std::string("align/") + id + ".tsv";
    WriteWav(buf, (fs::path(out_dir) / wav_rel).string());
    WriteAlignment(tokens, (fs::path(out_dir) / tsv_rel).string());

    char spk[32];
    std::snprintf(spk, sizeof(spk), "spk%03d", u % spec.n_speakers);
    manifest.entries.push_back({id, wav_rel, tsv_rel, spk, Split::kTrain});
  }
  AssignSplitsBySpeaker(&manifest, spec.split_speakers, DeriveSeed(spec.seed, "splits"));
  return manifest;
}

}  // namespace phonacq
