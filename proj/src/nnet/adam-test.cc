// src/nnet/adam-test.cc

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

#include "nnet/adam.h"

#include <cmath>
#include <vector>

#include "doctest.h"

namespace phonacq {

TEST_CASE("adam: zero gradient leaves parameters unchanged") {
  std::vector<double> w = {1.0, -2.0, 3.5}, g(3, 0.0), m(3, 0.0), v(3, 0.0);
  const auto keep = w;
  AdamOptions opts;
  for (int step = 1; step <= 10; ++step) AdamUpdate<double>(w, g, m, v, step, opts);
  CHECK(w == keep);
}

TEST_CASE("adam: first step moves each coordinate by lr against the gradient sign") {
  std::vector<double> w = {0.0, 0.0, 0.0}, g = {0.3, -5.0, 1e-3}, m(3, 0.0), v(3, 0.0);
  AdamOptions opts;
  opts.learning_rate = 0.01;
  AdamUpdate<double>(w, g, m, v, 1, opts);
  // m_hat / sqrt(v_hat) = g / |g|, so the step is lr * g / (|g| + eps).
  for (int i = 0; i < 3; ++i) {
    const double expect = -0.01 * g[i] / (std::fabs(g[i]) + 1e-8);
    CHECK(w[i] == doctest::Approx(expect).epsilon(1e-9));
  }
}

TEST_CASE("adam minimizes a scalar quadratic") {
  std::vector<double> w = {0.0}, g(1), m(1, 0.0), v(1, 0.0);
  AdamOptions opts;
  opts.learning_rate = 0.1;
  for (int step = 1; step <= 500; ++step) {
    g[0] = 2.0 * (w[0] - 2.0);
    AdamUpdate<double>(w, g, m, v, step, opts);
  }
  CHECK(std::fabs(w[0] - 2.0) < 1e-3);
}

TEST_CASE("adam step over a model is deterministic and counts steps") {
  ModelConfig cfg;
  cfg.input_dim = 6;
  cfg.intermediate_dim = 4;
  cfg.hidden_dim = 2;
  cfg.output_dim = 3;
  auto p1 = InitModel<float>(cfg), p2 = p1;
  auto grads = p1;  // any non-zero gradient
  auto s1 = InitAdamState(p1), s2 = InitAdamState(p2);
  AdamOptions opts;
  for (int i = 0; i < 3; ++i) {
    AdamStep(&p1, grads, &s1, opts);
    AdamStep(&p2, grads, &s2, opts);
  }
  CHECK(s1.step == 3);
  auto a = p1.Layers(), b = p2.Layers();
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i]->weight == b[i]->weight);
  CHECK(p1.enc_in.weight != grads.enc_in.weight);
}

}  // namespace phonacq
