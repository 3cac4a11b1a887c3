// src/corpus/audio-test.cc

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

#include "corpus/audio.h"

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "test-util.h"
#include "base/error.h"
#include "base/random.h"

namespace phonacq {

TEST_CASE("load_wav: silence") {
  TempDir dir;
  WriteWavPcm16({std::vector<int16_t>(16000, 0)}, 16000, dir.File("s.wav"));
  AudioBuffer b = LoadWav(dir.File("s.wav"));
  CHECK(b.sample_rate == 16000);
  REQUIRE(b.samples.size() == 16000);
  for (float x : b.samples) CHECK(x == 0.0f);
  CHECK(b.DurationSeconds() == doctest::Approx(1.0));
}

TEST_CASE("load_wav: full-scale square wave is scaled by 1/32768") {
  TempDir dir;
  std::vector<int16_t> sq(64);
  for (size_t i = 0; i < sq.size(); ++i) sq[i] = (i / 8) % 2 ? -32767 : 32767;
  WriteWavPcm16({sq}, 8000, dir.File("q.wav"));
  AudioBuffer b = LoadWav(dir.File("q.wav"));
  REQUIRE(b.samples.size() == sq.size());
  for (size_t i = 0; i < sq.size(); ++i)
    CHECK(b.samples[i] == static_cast<float>(sq[i] / 32768.0));
}

TEST_CASE("load_wav: stereo x and -x cancel") {
  TempDir dir;
  Rng rng(5);
  std::vector<int16_t> x(1000), y(1000);
  for (size_t i = 0; i < x.size(); ++i) {
    x[i] = static_cast<int16_t>(static_cast<int>(rng.UniformInt(65535)) - 32767);
    y[i] = static_cast<int16_t>(-x[i]);
  }
  WriteWavPcm16({x, y}, 22050, dir.File("st.wav"));
  AudioBuffer b = LoadWav(dir.File("st.wav"));
  CHECK(b.sample_rate == 22050);
  REQUIRE(b.samples.size() == 1000);
  for (float v : b.samples) CHECK(v == 0.0f);
}

TEST_CASE("load_wav: error kinds are distinct") {
  TempDir dir;
  auto code_of = [](const std::string &path) {
    try {
      LoadWav(path);
    } catch (const Error &e) {
      return e.code();
    }
    return ErrorCode::kInvalidArgument;
  };
  CHECK(code_of(dir.File("nope.wav")) == ErrorCode::kMissingFile);
  WriteFileBytes(dir.File("junk.wav"), "this is not a wav file at all");
  CHECK(code_of(dir.File("junk.wav")) == ErrorCode::kMalformedHeader);
  // 8-bit PCM: rewrite the bits-per-sample field of a valid file.
  WriteWavPcm16({std::vector<int16_t>(10, 0)}, 16000, dir.File("b8.wav"));
  std::string bytes = ReadFileBytes(dir.File("b8.wav"));
  bytes[34] = 8;
  WriteFileBytes(dir.File("b8.wav"), bytes);
  CHECK(code_of(dir.File("b8.wav")) == ErrorCode::kUnsupportedEncoding);
  // IEEE float format tag.
  WriteWavPcm16({std::vector<int16_t>(10, 0)}, 16000, dir.File("f.wav"));
  bytes = ReadFileBytes(dir.File("f.wav"));
  bytes[20] = 3;
  WriteFileBytes(dir.File("f.wav"), bytes);
  CHECK(code_of(dir.File("f.wav")) == ErrorCode::kUnsupportedEncoding);
  // Truncated data chunk.
  WriteWavPcm16({std::vector<int16_t>(100, 1)}, 16000, dir.File("t.wav"));
  bytes = ReadFileBytes(dir.File("t.wav"));
  WriteFileBytes(dir.File("t.wav"), bytes.substr(0, bytes.size() - 50));
  CHECK(code_of(dir.File("t.wav")) == ErrorCode::kMalformedHeader);
}

TEST_CASE("write_wav / load_wav round trip within one quantization step") {
  TempDir dir;
  AudioBuffer b;
  b.sample_rate = 16000;
  Rng rng(2);
  for (int i = 0; i < 500; ++i) b.samples.push_back(static_cast<float>(rng.Uniform() * 2 - 1));
  WriteWav(b, dir.File("r.wav"));
  AudioBuffer r = LoadWav(dir.File("r.wav"));
  REQUIRE(r.samples.size() == b.samples.size());
  for (size_t i = 0; i < b.samples.size(); ++i)
    CHECK(std::abs(r.samples[i] - b.samples[i]) <= 1.0 / 32768 + 1e-7);
}

TEST_CASE("resample_audio: same rate is the identity") {
  AudioBuffer b;
  b.sample_rate = 16000;
  Rng rng(3);
  for (int i = 0; i < 300; ++i) b.samples.push_back(static_cast<float>(rng.Normal() * 0.1));
  AudioBuffer r = ResampleAudio(b, 16000);
  CHECK(r.sample_rate == 16000);
  CHECK(r.samples == b.samples);
}

TEST_CASE("resample_audio: DC is preserved") {
  AudioBuffer b;
  b.sample_rate = 44100;
  b.samples.assign(44100, 0.5f);
  AudioBuffer r = ResampleAudio(b, 16000);
  CHECK(r.samples.size() == 16000);
  for (float x : r.samples) CHECK(std::abs(x - 0.5) < 1e-3);
}

TEST_CASE("resample_audio: 1 kHz sine matches the analytic sine") {
  const double pi = std::numbers::pi;
  AudioBuffer b;
  b.sample_rate = 44100;
  for (int i = 0; i < 44100; ++i)
    b.samples.push_back(static_cast<float>(0.8 * std::sin(2 * pi * 1000.0 * i / 44100.0)));
  AudioBuffer r = ResampleAudio(b, 16000);
  REQUIRE(r.samples.size() == 16000);
  double worst = 0.0;
  // Edges see a clamped input, so skip one kernel width at each end.
  for (size_t i = 100; i + 100 < r.samples.size(); ++i)
    worst = std::max(worst, std::abs(r.samples[i] - 0.8 * std::sin(2 * pi * 1000.0 * i / 16000.0)));
  CHECK(worst < 1e-2);
}

TEST_CASE("resample_audio: duration preserved within one output sample") {
  for (int n : {1, 7, 441, 1000, 44100, 12345}) {
    for (auto [src, dst] : {std::pair{44100, 16000}, {16000, 44100}, {8000, 16000}, {22050, 16000}}) {
      AudioBuffer b;
      b.sample_rate = src;
      b.samples.assign(static_cast<size_t>(n), 0.1f);
      AudioBuffer r = ResampleAudio(b, dst);
      CHECK(std::abs(r.DurationSeconds() - b.DurationSeconds()) <= 1.0 / dst + 1e-12);
    }
  }
}

TEST_CASE("resample_audio: non-positive target rate") {
  AudioBuffer b;
  b.samples.assign(10, 0.f);
  CHECK_THROWS_AS(ResampleAudio(b, 0), Error);
  CHECK_THROWS_AS(ResampleAudio(b, -16000), Error);
}

}  // namespace phonacq
