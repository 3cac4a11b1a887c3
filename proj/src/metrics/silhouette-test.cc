// src/metrics/silhouette-test.cc

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

#include "metrics/silhouette.h"

#include "doctest.h"
#include "oracles.h"
#include "base/error.h"
#include "base/random.h"

namespace phonacq {

static Eigen::MatrixXd Col(std::initializer_list<double> v) {
  Eigen::MatrixXd m(v.size(), 1);
  int i = 0;
  for (double x : v) m(i++, 0) = x;
  return m;
}

TEST_CASE("silhouette: hand examples") {
  // Outer points have b = 5.5, inner points b = 4.5; a = 1 throughout.
  const double expect = ((1 - 1 / 5.5) + (1 - 1 / 4.5)) / 2;
  CHECK(SilhouettePair(Col({0, 1}), Col({5, 6})) == doctest::Approx(expect).epsilon(1e-12));
  CHECK(std::abs(SilhouettePair(Col({0, 1}), Col({5, 6})) - 0.798) < 1e-3);
  CHECK(SilhouettePair(Col({0, 1, 2}), Col({0, 1, 2})) <= 0.0);
  CHECK(SilhouettePair(Col({0}), Col({3})) == 0.0);
  CHECK_THROWS_AS(SilhouettePair(Eigen::MatrixXd(0, 1), Col({1})), Error);
}

TEST_CASE("silhouette matches the direct formula on small instances") {
  Rng rng(21);
  for (int inst = 0; inst < 30; ++inst) {
    const int na = 1 + static_cast<int>(rng.UniformInt(4));
    const int nb = 1 + static_cast<int>(rng.UniformInt(4));
    const int d = 1 + static_cast<int>(rng.UniformInt(3));
    Eigen::MatrixXd a(na, d), b(nb, d);
    for (int i = 0; i < a.size(); ++i) a.data()[i] = rng.Normal();
    for (int i = 0; i < b.size(); ++i) b.data()[i] = rng.Normal() + 1.0;
    const double s = SilhouettePair(a, b);
    CHECK(std::abs(s - oracle::Silhouette(a, b)) < 1e-9);
    CHECK(s >= -1.0);
    CHECK(s <= 1.0);
  }
}

TEST_CASE("silhouette matrix") {
  std::vector<Eigen::MatrixXd> cls = {Col({0, 0.1}), Col({1, 1.1}), Col({10, 10.1})};
  Eigen::MatrixXd m = SilhouetteMatrix(cls);
  CHECK(m(0, 2) > m(0, 1));
  for (int i = 0; i < 3; ++i) {
    CHECK(std::isnan(m(i, i)));
    for (int j = 0; j < 3; ++j)
      if (i != j) CHECK(m(i, j) == m(j, i));
  }
  CHECK_THROWS_AS(SilhouetteMatrix({Col({1})}), Error);
}

}  // namespace phonacq
