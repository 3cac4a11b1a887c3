// src/corpus/synth-test.cc

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

#include <cmath>
#include <filesystem>
#include <map>

#include "doctest.h"
#include "test-util.h"
#include "base/error.h"
#include "corpus/alignment.h"
#include "corpus/audio.h"

namespace phonacq {

static SynthSpec FiveClassSpec(int n_utterances) {
  SynthSpec s;
  s.language = "toy";
  s.n_utterances = n_utterances;
  s.seed = 123;
  const double f[5][2] = {{300, 900}, {500, 1500}, {800, 2400}, {1200, 3000}, {200, 4000}};
  for (int c = 0; c < 5; ++c)
    s.classes.push_back({"c" + std::to_string(c), {f[c][0], f[c][1]}, 0.1 * c, 0.06, 0.01});
  return s;
}

TEST_CASE("synthesize_corpus: zero utterances writes nothing") {
  TempDir dir;
  SynthSpec s = FiveClassSpec(0);
  DatasetManifest m = SynthesizeCorpus(s, dir.File("out"));
  CHECK(m.entries.empty());
  CHECK(!std::filesystem::exists(dir.File("out")));
}

TEST_CASE("synthesize_corpus: deterministic bytes for a fixed seed") {
  TempDir a, b;
  SynthSpec s = FiveClassSpec(6);
  DatasetManifest ma = SynthesizeCorpus(s, a.File("c"));
  DatasetManifest mb = SynthesizeCorpus(s, b.File("c"));
  REQUIRE(ma.entries.size() == 6);
  for (size_t i = 0; i < ma.entries.size(); ++i) {
    CHECK(ReadFileBytes(a.File("c/" + ma.entries[i].audio_path)) ==
          ReadFileBytes(b.File("c/" + mb.entries[i].audio_path)));
    CHECK(ReadFileBytes(a.File("c/" + ma.entries[i].alignment_path)) ==
          ReadFileBytes(b.File("c/" + mb.entries[i].alignment_path)));
    CHECK(ma.entries[i].split == mb.entries[i].split);
  }
  s.seed = 124;
  TempDir c;
  DatasetManifest mc = SynthesizeCorpus(s, c.File("c"));
  CHECK(ReadFileBytes(a.File("c/" + ma.entries[0].audio_path)) !=
        ReadFileBytes(c.File("c/" + mc.entries[0].audio_path)));
}

TEST_CASE("synthesize_corpus: token counts are near uniform and alignments fit the audio") {
  TempDir dir;
  SynthSpec s = FiveClassSpec(200);
  DatasetManifest m = SynthesizeCorpus(s, dir.File("c"));
  ValidateManifest(m);
  std::map<std::string, int> counts;
  int total = 0;
  for (const auto &e : m.entries) {
    AudioBuffer audio = LoadWav(dir.File("c/" + e.audio_path));
    auto tokens = ParseAlignment(dir.File("c/" + e.alignment_path));
    REQUIRE(!tokens.empty());
    CHECK(tokens.back().end_s <= audio.DurationSeconds() + 1e-9);
    CHECK(tokens.front().start_s == 0.0);
    for (size_t i = 1; i < tokens.size(); ++i) CHECK(tokens[i].start_s == tokens[i - 1].end_s);
    for (const auto &t : tokens) {
      if (t.tier != Tier::kPhone) continue;
      ++counts[t.label];
      ++total;
    }
  }
  CHECK(total == 2000);
  // Multinomial(2000, 1/5): sd = sqrt(2000 * 0.2 * 0.8).
  const double sd = std::sqrt(2000 * 0.2 * 0.8);
  REQUIRE(counts.size() == 5);
  for (const auto &[label, n] : counts) CHECK(std::abs(n - 400) <= 3 * sd);
}

TEST_CASE("synthesize_corpus: audio inside the phone intervals only, silence between") {
  TempDir dir;
  SynthSpec s = FiveClassSpec(2);
  DatasetManifest m = SynthesizeCorpus(s, dir.File("c"));
  for (const auto &e : m.entries) {
    AudioBuffer audio = LoadWav(dir.File("c/" + e.audio_path));
    for (const auto &t : ParseAlignment(dir.File("c/" + e.alignment_path))) {
      const size_t a = static_cast<size_t>(std::llround(t.start_s * audio.sample_rate));
      const size_t b = static_cast<size_t>(std::llround(t.end_s * audio.sample_rate));
      double energy = 0.0;
      for (size_t i = a; i < b; ++i) energy += audio.samples[i] * audio.samples[i];
      if (t.tier == Tier::kSilence) CHECK(energy == 0.0);
      else CHECK(energy > 0.0);
      for (size_t i = a; i < b; ++i) CHECK(std::abs(audio.samples[i]) <= 1.0f);
    }
  }
}

TEST_CASE("synth spec validation and JSON round trip") {
  SynthSpec s = FiveClassSpec(3);
  s.classes[0].frequencies_hz[0] = 9000;  // above Nyquist at 16 kHz
  CHECK_THROWS_AS(s.Check(), Error);
  s = FiveClassSpec(3);
  s.classes[1].mean_duration_s = 0.0;
  CHECK_THROWS_AS(s.Check(), Error);
  s = FiveClassSpec(3);
  s.classes[2].noise_fraction = 1.5;
  CHECK_THROWS_AS(s.Check(), Error);

  TempDir dir;
  s = FiveClassSpec(3);
  s.classes[3].frequency_jitter = 0.3;
  s.noise_floor = 0.01;
  WriteSynthSpec(s, dir.File("s.json"));
  SynthSpec r = ReadSynthSpec(dir.File("s.json"));
  CHECK(r.n_utterances == 3);
  CHECK(r.noise_floor == 0.01);
  REQUIRE(r.classes.size() == 5);
  CHECK(r.classes[3].frequency_jitter == 0.3);
  CHECK(r.classes[2].frequencies_hz == s.classes[2].frequencies_hz);
  CHECK(r.classes[4].noise_fraction == s.classes[4].noise_fraction);
}

TEST_CASE("synthesize_corpus: unwritable output") {
  TempDir dir;
  WriteFileBytes(dir.File("file"), "x");
  SynthSpec s = FiveClassSpec(1);
  CHECK_THROWS_AS(SynthesizeCorpus(s, dir.File("file/sub")), Error);
}

}  // namespace phonacq
