// src/metrics/normalize-test.cc

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

#include "metrics/normalize.h"

#include "doctest.h"
#include "base/error.h"
#include "base/random.h"

namespace phonacq {

static EmbeddingSet FromColumn(const std::vector<double> &v) {
  EmbeddingSet s;
  for (double x : v) s.push_back({Eigen::VectorXd::Constant(1, x), "a", PhoneStatus::kPhoneme});
  return s;
}

static EmbeddingSet RandomSet(int n, int d, uint64_t seed) {
  Rng rng(seed);
  EmbeddingSet s;
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd v(d);
    for (int j = 0; j < d; ++j) v[j] = 3.0 * rng.Normal() + j;
    s.push_back({v, i % 2 ? "a" : "b", PhoneStatus::kPhoneme});
  }
  return s;
}

TEST_CASE("trim: 1..1000 keeps 6..995") {
  std::vector<double> v;
  for (int i = 1; i <= 1000; ++i) v.push_back(i);
  EmbeddingSet t = TrimOutliers(FromColumn(v), 0.005);
  REQUIRE(t.size() == 990);
  CHECK(t.front().vector[0] == 6.0);
  CHECK(t.back().vector[0] == 995.0);
  CHECK(TrimOutliers(FromColumn(v), 0.0).size() == 1000);
  CHECK(TrimOutliers(FromColumn(std::vector<double>(50, 2.0)), 0.005).size() == 50);
  CHECK_THROWS_AS(TrimOutliers(FromColumn(v), 0.5), Error);
}

TEST_CASE("percentile by linear interpolation") {
  CHECK(Percentile({1, 2, 3, 4}, 0.5) == 2.5);
  CHECK(Percentile({4, 1, 3, 2}, 0.0) == 1.0);
  CHECK(Percentile({4, 1, 3, 2}, 1.0) == 4.0);
  CHECK_THROWS_AS(Percentile({}, 0.5), Error);
}

TEST_CASE("zscore moments") {
  EmbeddingSet s = RandomSet(300, 3, 1);
  NormStats st;
  EmbeddingSet z = ZscoreNormalize(s, &st);
  for (int d = 0; d < 3; ++d) {
    double m = 0, v = 0;
    for (const auto &e : z) m += e.vector[d];
    m /= z.size();
    for (const auto &e : z) v += (e.vector[d] - m) * (e.vector[d] - m);
    v /= z.size();
    CHECK(std::abs(m) < 1e-9);
    CHECK(std::abs(std::sqrt(v) - 1.0) < 1e-9);
    CHECK(!st.degenerate[d]);
  }
  CHECK_THROWS_AS(ZscoreNormalize({}), Error);
}

TEST_CASE("zscore is affine invariant and passes constant dimensions through") {
  EmbeddingSet s = RandomSet(100, 2, 2);
  EmbeddingSet t = s;
  for (auto &e : t) e.vector = 2.5 * e.vector + Eigen::Vector2d(-7, 3);
  EmbeddingSet zs = ZscoreNormalize(s), zt = ZscoreNormalize(t);
  for (size_t i = 0; i < zs.size(); ++i) CHECK((zs[i].vector - zt[i].vector).norm() < 1e-9);
  for (auto &e : s) e.vector[1] = 4.0;
  NormStats st;
  EmbeddingSet z = ZscoreNormalize(s, &st);
  CHECK(st.degenerate[1]);
  CHECK(!st.degenerate[0]);
  for (const auto &e : z) CHECK(e.vector[1] == 4.0);
}

TEST_CASE("minmax endpoints are exact") {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    EmbeddingSet m = MinmaxNormalize(RandomSet(57, 3, seed));
    for (int d = 0; d < 3; ++d) {
      double lo = 2, hi = -2;
      for (const auto &e : m) {
        lo = std::min(lo, e.vector[d]);
        hi = std::max(hi, e.vector[d]);
      }
      CHECK(lo == -1.0);
      CHECK(hi == 1.0);
    }
  }
  EmbeddingSet mid = MinmaxNormalize(FromColumn({2, 4, 6}));
  CHECK(mid[1].vector[0] == 0.0);
  CHECK_THROWS_AS(MinmaxNormalize(FromColumn({1, 1})), Error);
}

}  // namespace phonacq
