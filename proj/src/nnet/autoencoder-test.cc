// src/nnet/autoencoder-test.cc

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

#include "nnet/autoencoder.h"

#include "doctest.h"
#include "oracles.h"
#include "base/error.h"
#include "base/random.h"

namespace phonacq {

static MatrixT<float> RandomBatch(Eigen::Index rows, Eigen::Index cols, uint64_t seed) {
  Rng rng(seed);
  MatrixT<float> m(rows, cols);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = static_cast<float>(rng.Normal());
  return m;
}

TEST_CASE("parameter count for the default model") {
  ModelConfig cfg;
  CHECK(cfg.NumParams() == 598344);
  CHECK(cfg.NumEncoderParams() == 382211);
  ModelParams p = InitModel<float>(cfg);
  CHECK(p.NumParams() == 598344);
  // Independent count from the layer list.
  const int dims[][2] = {{975, 256}, {256, 256}, {256, 256}, {256, 3},
                         {3, 256},   {256, 256}, {256, 256}, {256, 325}};
  int64_t n = 0;
  for (auto &d : dims) n += int64_t{d[0]} * d[1] + d[1];
  CHECK(n == 598344);
}

TEST_CASE("init_model: He-uniform weights, zero biases, deterministic") {
  ModelConfig cfg;
  cfg.init_seed = 17;
  ModelParams a = InitModel<float>(cfg), b = InitModel<float>(cfg);
  auto la = a.Layers(), lb = b.Layers();
  for (size_t l = 0; l < la.size(); ++l) {
    CHECK(la[l]->weight == lb[l]->weight);
    CHECK(la[l]->bias.isZero(0.0f));
    const float bound = std::sqrt(6.0f / static_cast<float>(la[l]->InDim()));
    CHECK(la[l]->weight.cwiseAbs().maxCoeff() <= bound);
    CHECK(la[l]->weight.cwiseAbs().maxCoeff() > 0.5f * bound);
  }
  cfg.init_seed = 18;
  CHECK(InitModel<float>(cfg).enc_in.weight != a.enc_in.weight);
}

TEST_CASE("forward shapes for every hidden width") {
  for (int h = 1; h <= 15; ++h) {
    ModelConfig cfg;
    cfg.hidden_dim = h;
    ModelParams p = InitModel<float>(cfg);
    auto r = Forward<float>(p, RandomBatch(3, 975, h));
    CHECK(r.hidden.rows() == 3);
    CHECK(r.hidden.cols() == h);
    CHECK(r.output.cols() == 325);
    CHECK(p.dec_in.InDim() == h);
    CHECK(EncodeBatch<float>(p, RandomBatch(3, 975, h)) == r.hidden);
  }
  ModelParams p = InitModel<float>(ModelConfig());
  CHECK_THROWS_AS(Forward<float>(p, RandomBatch(2, 974, 1)), Error);
}

TEST_CASE("zero parameters give zero output") {
  ModelParams p = InitModel<float>(ModelConfig()).ZerosLike();
  auto r = Forward<float>(p, RandomBatch(5, 975, 3));
  CHECK(r.output.isZero(0.0f));
  CHECK(r.hidden.isZero(0.0f));
}

TEST_CASE("mse_loss") {
  MatrixT<float> a = RandomBatch(2, 325, 1);
  CHECK(MseLoss<float>(a, a) == 0.0);
  MatrixT<float> b = a.array() + 1.0f;
  CHECK(MseLoss<float>(b, a) == doctest::Approx(1.0).epsilon(1e-6));
  MatrixT<double> o(1, 2), t(1, 2);
  o << 0, 3;
  t << 0, 0;
  CHECK(MseLoss<double>(o, t) == 4.5);
  CHECK_THROWS_AS(MseLoss<float>(a, RandomBatch(1, 325, 2)), Error);
  CHECK(MseLoss<float>(RandomBatch(4, 325, 3), RandomBatch(4, 325, 4)) >= 0.0);
}

TEST_CASE("backward matches central finite differences") {
  for (uint64_t seed = 1; seed <= 5; ++seed) CHECK(oracle::GradientCheck(seed) < 1e-4);
}

TEST_CASE("backward: zero-loss configuration has zero gradient") {
  ModelParams p = InitModel<float>(ModelConfig()).ZerosLike();
  MatrixT<float> x = RandomBatch(3, 975, 5), y = MatrixT<float>::Zero(3, 325);
  double loss = -1;
  ModelParams g = Backward<float>(p, x, y, &loss);
  CHECK(loss == 0.0);
  for (auto *l : g.Layers()) {
    CHECK(l->weight.isZero(0.0f));
    CHECK(l->bias.isZero(0.0f));
  }
}

TEST_CASE("backward: duplicating the batch leaves gradients unchanged") {
  ModelConfig cfg;
  cfg.input_dim = 20;
  cfg.intermediate_dim = 8;
  cfg.hidden_dim = 2;
  cfg.output_dim = 10;
  cfg.init_seed = 4;
  AutoencoderT<double> p = InitModel<double>(cfg);
  Rng rng(2);
  MatrixT<double> x(3, 20), y(3, 10);
  for (Eigen::Index i = 0; i < x.size(); ++i) x.data()[i] = rng.Normal();
  for (Eigen::Index i = 0; i < y.size(); ++i) y.data()[i] = rng.Normal();
  MatrixT<double> x2(6, 20), y2(6, 10);
  x2 << x, x;
  y2 << y, y;
  double l1, l2;
  auto g1 = Backward<double>(p, x, y, &l1), g2 = Backward<double>(p, x2, y2, &l2);
  CHECK(l1 == doctest::Approx(l2).epsilon(1e-12));
  auto a = g1.Layers(), b = g2.Layers();
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK((a[i]->weight - b[i]->weight).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((a[i]->bias - b[i]->bias).cwiseAbs().maxCoeff() < 1e-12);
  }
}

}  // namespace phonacq
