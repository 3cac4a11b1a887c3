// src/segments/segments-test.cc

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

#include "segments/segments.h"

#include <cmath>

#include "doctest.h"
#include "test-util.h"
#include "base/error.h"
#include "base/random.h"

namespace phonacq {

static RecordingFeatures Ramp(const std::string &id, int T) {
  RecordingFeatures r;
  r.recording_id = id;
  r.features.data.resize(T, 39);
  for (int t = 0; t < T; ++t)
    for (int c = 0; c < 39; ++c) r.features.data(t, c) = static_cast<float>(t + 1000 * c);
  return r;
}

TEST_CASE("estimate_length_stats") {
  std::vector<std::vector<AlignedToken>> al = {
      {{"SIL", 0.0, 0.5, Tier::kSilence}, {"a", 0.5, 0.6, Tier::kPhone}},
      {{"b", 0.0, 0.2, Tier::kPhone}, {"NOISE", 0.2, 1.0, Tier::kNoise}}};
  SegmentLengthStats s = EstimateLengthStats(al);
  CHECK(s.mean_frames == doctest::Approx(15.0));
  CHECK(s.sd_frames == doctest::Approx(5.0));
  SegmentLengthStats one = EstimateLengthStats({{{"a", 0.0, 0.1, Tier::kPhone}}});
  CHECK(one.sd_frames == 0.0);
  CHECK_THROWS_AS(EstimateLengthStats({{{"SIL", 0.0, 0.1, Tier::kSilence}}}), Error);
  CHECK_THROWS_AS(EstimateLengthStats({}), Error);
}

TEST_CASE("sample_lengths") {
  CHECK(SampleLengths({15, 5}, 0, 1).empty());
  auto v = SampleLengths({15, 5}, 10000, 7);
  REQUIRE(v.size() == 10000);
  double sum = 0;
  for (int x : v) {
    CHECK(x >= 1);
    sum += x;
  }
  CHECK(std::abs(sum / v.size() - 15.0) < 0.5);
  CHECK(SampleLengths({15, 5}, 100, 7) == std::vector<int>(v.begin(), v.begin() + 100));
  // Heavy truncation still yields positive lengths.
  for (int x : SampleLengths({0.5, 3.0}, 2000, 3)) CHECK(x >= 1);
}

TEST_CASE("resample_time") {
  FloatMatrix id = FloatMatrix::Random(25, 4);
  CHECK(ResampleTime(id) == id);
  FloatMatrix one = FloatMatrix::Random(1, 3);
  FloatMatrix rep = ResampleTime(one);
  REQUIRE(rep.rows() == 25);
  for (int t = 0; t < 25; ++t) CHECK(rep.row(t) == one.row(0));
  FloatMatrix ramp(49, 1);
  for (int t = 0; t < 49; ++t) ramp(t, 0) = static_cast<float>(t);
  FloatMatrix out = ResampleTime(ramp);
  for (int t = 0; t < 25; ++t) CHECK(out(t, 0) == doctest::Approx(2.0 * t));
  CHECK_THROWS_AS(ResampleTime(FloatMatrix(0, 3)), Error);
}

TEST_CASE("resample_time stays within column ranges and keeps endpoints") {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const int T = 1 + static_cast<int>(rng.UniformInt(80));
    FloatMatrix x(T, 3);
    for (int i = 0; i < x.size(); ++i) x.data()[i] = static_cast<float>(rng.Normal());
    FloatMatrix y = ResampleTime(x);
    CHECK(y.row(0) == x.row(0));
    CHECK(y.row(24) == x.row(T - 1));
    for (int c = 0; c < 3; ++c) {
      CHECK(y.col(c).minCoeff() >= x.col(c).minCoeff());
      CHECK(y.col(c).maxCoeff() <= x.col(c).maxCoeff());
    }
  }
}

TEST_CASE("sample_training_segments") {
  SegmentLengthStats stats{15, 5};
  CHECK(SampleTrainingSegments({}, stats, 0, 1).empty());
  CHECK_THROWS_AS(SampleTrainingSegments({}, stats, 3, 1), Error);

  std::vector<RecordingFeatures> recs = {Ramp("r1", 1000), Ramp("r2", 3000)};
  auto a = SampleTrainingSegments(recs, stats, 10000, 42);
  auto b = SampleTrainingSegments(recs, stats, 10000, 42);
  REQUIRE(a.size() == 10000);
  int second = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    const Segment &s = a[i];
    CHECK(!s.label.has_value());
    CHECK(s.input.rows() == 25);
    CHECK(s.input.cols() == 39);
    CHECK(s.target == s.input.leftCols(13));
    CHECK(s.source.start_frame >= 0);
    const int T = s.source.recording_id == "r1" ? 1000 : 3000;
    CHECK(s.source.start_frame + s.source.length <= T);
    CHECK(s.input(0, 0) == static_cast<float>(s.source.start_frame));
    if (s.source.recording_id == "r2") ++second;
    CHECK(s.source.recording_id == b[i].source.recording_id);
    CHECK(s.source.start_frame == b[i].source.start_frame);
    CHECK(s.input == b[i].input);
  }
  CHECK(std::abs(second / 10000.0 - 0.75) < 0.03);
}

TEST_CASE("sample_training_segments clips to short recordings") {
  std::vector<RecordingFeatures> recs = {Ramp("tiny", 3)};
  for (const auto &s : SampleTrainingSegments(recs, {40, 1}, 20, 9)) {
    CHECK(s.source.length == 3);
    CHECK(s.source.start_frame == 0);
  }
}

TEST_CASE("extract_eval_segments") {
  RecordingFeatures r = Ramp("u", 100);
  CHECK(ExtractEvalSegments(r, {{"SIL", 0.0, 1.0, Tier::kSilence}}).segments.empty());
  auto res = ExtractEvalSegments(r, {{"SIL", 0.0, 0.1, Tier::kSilence},
                                     {"a", 0.10, 0.35, Tier::kPhone},
                                     {"NOISE", 0.35, 0.4, Tier::kNoise},
                                     {"b", 0.4, 0.403, Tier::kPhone},
                                     {"c", 0.403, 0.5, Tier::kPhone},
                                     {"z", 2.0, 2.5, Tier::kPhone}});
  REQUIRE(res.segments.size() == 3);
  CHECK(res.skipped_tokens == 1);
  const Segment &a = res.segments[0];
  CHECK(a.label == "a");
  CHECK(a.source.start_frame == 10);
  CHECK(a.source.length == 25);
  CHECK(a.input == r.features.data.middleRows(10, 25));
  CHECK(res.segments[1].label == "b");
  CHECK(res.segments[1].source.start_frame == 40);
  CHECK(res.segments[1].source.length == 1);
  CHECK(res.segments[2].label == "c");
}

TEST_CASE("segments write/read round trip") {
  TempDir dir;
  std::vector<RecordingFeatures> recs = {Ramp("r", 200)};
  auto segs = SampleTrainingSegments(recs, {10, 2}, 5, 1);
  auto ev = ExtractEvalSegments(recs[0], {{"x", 0.0, 0.3, Tier::kPhone}});
  segs.push_back(ev.segments[0]);
  WriteSegments(segs, dir.File("s.phnf"), dir.File("s.tsv"));
  auto r = ReadSegments(dir.File("s.phnf"), dir.File("s.tsv"));
  REQUIRE(r.size() == segs.size());
  for (size_t i = 0; i < r.size(); ++i) {
    CHECK(r[i].input == segs[i].input);
    CHECK(r[i].target == segs[i].target);
    CHECK(r[i].label == segs[i].label);
    CHECK(r[i].source.recording_id == segs[i].source.recording_id);
    CHECK(r[i].source.start_frame == segs[i].source.start_frame);
    CHECK(r[i].source.length == segs[i].source.length);
  }
  WriteSegments({}, dir.File("e.phnf"), dir.File("e.tsv"));
  CHECK(ReadSegments(dir.File("e.phnf"), dir.File("e.tsv")).empty());
}

}  // namespace phonacq
