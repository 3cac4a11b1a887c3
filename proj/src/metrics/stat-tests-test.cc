// src/metrics/stat-tests-test.cc

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

#include "metrics/stat-tests.h"

#include <vector>

#include "doctest.h"
#include "oracles.h"
#include "base/error.h"
#include "base/random.h"

namespace phonacq {

static Eigen::MatrixXd Gaussian(Rng *rng, int n, int d, double shift = 0.0) {
  Eigen::MatrixXd m(n, d);
  for (int i = 0; i < m.size(); ++i) m.data()[i] = rng->Normal() + shift;
  return m;
}

TEST_CASE("hotelling: identical samples") {
  Rng rng(1);
  Eigen::MatrixXd a = Gaussian(&rng, 10, 3);
  HotellingResult r = HotellingT2(a, a);
  CHECK(r.t2 == 0.0);
  CHECK(r.p_value == 1.0);
}

TEST_CASE("hotelling: one dimension reduces to the squared pooled t") {
  Rng rng(2);
  for (int inst = 0; inst < 10; ++inst) {
    const int n1 = 2 + static_cast<int>(rng.UniformInt(6)), n2 = 2 + static_cast<int>(rng.UniformInt(6));
    std::vector<double> x(n1), y(n2);
    Eigen::MatrixXd a(n1, 1), b(n2, 1);
    for (int i = 0; i < n1; ++i) a(i, 0) = x[i] = rng.Normal();
    for (int i = 0; i < n2; ++i) b(i, 0) = y[i] = rng.Normal() + 0.5;
    const double t = oracle::PooledT(x, y);
    HotellingResult r = HotellingT2(a, b);
    CHECK(std::abs(r.t2 - t * t) < 1e-9);
    CHECK(std::abs(PooledTStatistic(x, y) - t) < 1e-9);
  }
}

TEST_CASE("hotelling: two dimensions match the closed form") {
  Rng rng(3);
  for (int inst = 0; inst < 10; ++inst) {
    const int n1 = 3 + static_cast<int>(rng.UniformInt(5)), n2 = 3 + static_cast<int>(rng.UniformInt(5));
    Eigen::MatrixXd a = Gaussian(&rng, n1, 2), b = Gaussian(&rng, n2, 2, 0.7);
    HotellingResult r = HotellingT2(a, b);
    oracle::Hotelling2d o = oracle::Hotelling2dOracle(a, b);
    CHECK(std::abs(r.t2 - o.t2) < 1e-9 * std::max(1.0, o.t2));
    CHECK(std::abs(r.f_stat - o.f) < 1e-9 * std::max(1.0, o.f));
    CHECK(std::abs(r.p_value - o.p) < 1e-9);
    CHECK(!r.ridge_applied);
  }
}

TEST_CASE("hotelling: separated Gaussians and errors") {
  Rng rng(4);
  HotellingResult r = HotellingT2(Gaussian(&rng, 25, 3), Gaussian(&rng, 25, 3, 10.0));
  CHECK(r.p_value < 1e-6);
  CHECK_THROWS_AS(HotellingT2(Gaussian(&rng, 2, 3), Gaussian(&rng, 2, 3)), Error);
  CHECK_THROWS_AS(HotellingT2(Gaussian(&rng, 5, 3), Gaussian(&rng, 5, 2)), Error);
  // Collinear data triggers the ridge.
  Eigen::MatrixXd a = Gaussian(&rng, 10, 2), b = Gaussian(&rng, 10, 2, 1.0);
  a.col(1) = a.col(0);
  b.col(1) = b.col(0);
  HotellingResult s = HotellingT2(a, b);
  CHECK(s.ridge_applied);
  CHECK(std::isfinite(s.t2));
}

TEST_CASE("hotelling: null p-values are uniform") {
  Rng rng(5);
  std::vector<double> p;
  for (int i = 0; i < 2000; ++i) p.push_back(HotellingT2(Gaussian(&rng, 25, 3), Gaussian(&rng, 25, 3)).p_value);
  CHECK(oracle::KsUniform(p) < 0.05);
}

TEST_CASE("hit rate") {
  Rng rng(6);
  Eigen::MatrixXd a = Gaussian(&rng, 2000, 3), b = Gaussian(&rng, 2000, 3);
  HitRateConfig cfg;
  cfg.seed = 9;
  const double null_rate = HitRate(a, b, cfg);
  CHECK(null_rate >= 0.03);
  CHECK(null_rate <= 0.07);
  CHECK(HitRate(a, b, cfg) == null_rate);
  Eigen::MatrixXd far = Gaussian(&rng, 100, 3, 8.0);
  CHECK(HitRate(a, far, cfg) == 1.0);
  CHECK_THROWS_AS(HitRate(a, Gaussian(&rng, 24, 3), cfg), Error);
}

TEST_CASE("welch t test") {
  const std::vector<double> a1 = {27.5, 21.0, 19.0, 23.6, 17.0, 17.9, 16.9, 20.1,
                                  21.9, 22.6, 23.1, 19.6, 19.0, 21.7, 21.4};
  const std::vector<double> a2 = {27.1, 22.0, 20.8, 23.4, 23.4, 23.5, 25.8, 22.0,
                                  24.8, 20.2, 21.9, 22.1, 22.9, 20.5, 24.4};
  // Reference values from scipy.stats.ttest_ind(equal_var=False).
  WelchResult r = WelchTTest(a1, a2);
  CHECK(r.t == doctest::Approx(-2.455356398286006).epsilon(1e-9));
  CHECK(r.df == doctest::Approx(24.988529290231416).epsilon(1e-9));
  CHECK(std::abs(r.p_value - 0.021378001462866985) < 1e-6);

  const std::vector<double> b1 = {17.2, 20.9, 22.6, 18.1, 21.7, 21.4, 23.5, 24.2, 14.7, 21.8};
  const std::vector<double> b2 = {21.5, 22.8, 21.0, 23.0, 21.6, 23.6, 22.5, 20.7, 23.4, 21.8,
                                  20.7, 21.7, 21.5, 22.5, 23.6, 21.5, 22.5, 23.5, 21.5, 21.8};
  WelchResult s = WelchTTest(b1, b2);
  CHECK(s.t == doctest::Approx(-1.5654335235985037).epsilon(1e-9));
  CHECK(std::abs(s.p_value - 0.14884169660532834) < 1e-6);

  WelchResult same = WelchTTest(a1, a1);
  CHECK(same.t == 0.0);
  CHECK(same.p_value == 1.0);
  const std::vector<double> z = {0, 1e-6, 0, -1e-6}, o = {1, 1 + 1e-6, 1, 1 - 1e-6};
  CHECK(WelchTTest(z, o).p_value < 1e-6);
  const std::vector<double> c = {1, 1, 1};
  CHECK_THROWS_AS(WelchTTest(c, c), Error);
  CHECK_THROWS_AS(WelchTTest(std::vector<double>{1.0}, a1), Error);
}

}  // namespace phonacq
