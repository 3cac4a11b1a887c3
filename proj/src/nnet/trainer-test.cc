// src/nnet/trainer-test.cc

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

#include "nnet/trainer.h"

#include <algorithm>

#include "doctest.h"
#include "base/error.h"
#include "base/random.h"

namespace phonacq {

static std::vector<Segment> RandomSegments(int n, uint64_t seed, float offset = 0.0f) {
  Rng rng(seed);
  std::vector<Segment> out;
  for (int i = 0; i < n; ++i) {
    FloatMatrix in(kSegmentFrames, 39);
    for (Eigen::Index j = 0; j < in.size(); ++j)
      in.data()[j] = offset + static_cast<float>(rng.Normal());
    out.push_back(MakeSegment(in, {"r", i, kSegmentFrames}, std::nullopt));
  }
  return out;
}

TEST_CASE("train: identical constant segments are memorized") {
  std::vector<Segment> segs;
  FloatMatrix in = FloatMatrix::Constant(kSegmentFrames, 39, 0.7f);
  for (int i = 0; i < 64; ++i) segs.push_back(MakeSegment(in, {"r", 0, 25}, std::nullopt));
  Dataset d = PackSegments(segs);
  TrainConfig cfg;
  cfg.epochs = 50;
  cfg.batch_size = 16;
  ModelParams init = InitModel<float>(ModelConfig());
  TrainResult r = Train(init, d, Dataset(), cfg);
  CHECK(r.history.train_loss.size() == 50);
  CHECK(r.history.train_loss.back() < 1e-3);
  CHECK(EvaluateLoss(r.final_params, d) < 1e-3);
}

TEST_CASE("train: history bookkeeping and determinism") {
  auto train = RandomSegments(200, 1), val = RandomSegments(50, 2);
  InputNormalizer norm = InputNormalizer::Fit(train);
  norm.Apply(&train);
  norm.Apply(&val);
  Dataset dt = PackSegments(train), dv = PackSegments(val);
  TrainConfig cfg;
  cfg.epochs = 4;
  cfg.batch_size = 32;
  cfg.shuffle_seed = 5;
  ModelConfig mc;
  mc.init_seed = 3;
  ModelParams init = InitModel<float>(mc);
  TrainResult a = Train(init, dt, dv, cfg), b = Train(init, dt, dv, cfg);
  CHECK(a.history.train_loss.size() == 4);
  CHECK(a.history.val_loss.size() == 4);
  const auto best = std::min_element(a.history.val_loss.begin(), a.history.val_loss.end()) -
                    a.history.val_loss.begin();
  CHECK(a.history.best_epoch == best);
  CHECK(a.history.train_loss == b.history.train_loss);
  CHECK(a.history.val_loss == b.history.val_loss);
  CHECK(a.final_params.dec_out.weight == b.final_params.dec_out.weight);
  CHECK(EvaluateLoss(a.best_params, dv) == doctest::Approx(a.history.val_loss[best]).epsilon(1e-5));
  CHECK_THROWS_AS(Train(init, Dataset(), dv, cfg), Error);
}

TEST_CASE("input normalizer") {
  auto segs = RandomSegments(100, 7, 3.0f);
  InputNormalizer n = InputNormalizer::Fit(segs);
  CHECK(n.mean.size() == 39);
  n.Apply(&segs);
  double sum = 0.0;
  for (const auto &s : segs) {
    sum += s.input.col(0).cast<double>().sum();
    CHECK(s.target == s.input.leftCols(13));
  }
  CHECK(std::abs(sum / (100 * 25)) < 1e-4);
  CHECK_THROWS_AS(InputNormalizer::Fit({}), Error);
}

TEST_CASE("encode: one embedding per segment, equal to the forward hidden output") {
  ModelConfig mc;
  mc.hidden_dim = 4;
  ModelParams p = InitModel<float>(mc);
  auto segs = RandomSegments(10, 9);
  segs[3].label = "a";
  segs[4] = segs[3];
  EmbeddingSet e = Encode(p, segs);
  REQUIRE(e.size() == 10);
  CHECK(e[3].label == "a");
  CHECK(e[3].vector == e[4].vector);
  CHECK(e[0].vector.size() == 4);
  FloatMatrix hidden = EncodeSegments(p, segs);
  CHECK(Forward<float>(p, PackSegments(segs).inputs).hidden == hidden);
}

}  // namespace phonacq
