// src/metrics/kmeans-test.cc

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

#include "metrics/kmeans.h"

#include <set>

#include "doctest.h"
#include "base/error.h"
#include "base/random.h"

namespace phonacq {

TEST_CASE("kmeans: k = n gives singleton clusters") {
  Rng rng(1);
  Eigen::MatrixXd x(12, 3);
  for (int i = 0; i < x.size(); ++i) x.data()[i] = rng.Normal();
  KMeansResult r = KMeans(x, {12, 300, 3});
  CHECK(std::set<int>(r.assignments.begin(), r.assignments.end()).size() == 12);
  CHECK(r.inertia == doctest::Approx(0.0));
  CHECK_THROWS_AS(KMeans(x, {13, 300, 3}), Error);
}

TEST_CASE("kmeans: two separated blobs") {
  Rng rng(2);
  Eigen::MatrixXd x(100, 2);
  for (int i = 0; i < 100; ++i) {
    const double c = i < 50 ? 0.0 : 20.0;
    x(i, 0) = c + 0.3 * rng.Normal();
    x(i, 1) = c + 0.3 * rng.Normal();
  }
  KMeansResult r = KMeans(x, {2, 300, 5});
  for (int i = 1; i < 50; ++i) CHECK(r.assignments[i] == r.assignments[0]);
  for (int i = 51; i < 100; ++i) CHECK(r.assignments[i] == r.assignments[50]);
  CHECK(r.assignments[0] != r.assignments[50]);
}

TEST_CASE("kmeans: inertia never increases, deterministic") {
  Rng rng(3);
  Eigen::MatrixXd x(500, 3);
  for (int i = 0; i < x.size(); ++i) x.data()[i] = rng.Normal();
  for (uint64_t seed = 0; seed < 5; ++seed) {
    KMeansResult r = KMeans(x, {20, 300, seed});
    REQUIRE(!r.inertia_history.empty());
    for (size_t i = 1; i < r.inertia_history.size(); ++i)
      CHECK(r.inertia_history[i] <= r.inertia_history[i - 1] * (1 + 1e-12));
    CHECK(r.inertia == doctest::Approx(r.inertia_history.back()));
    KMeansResult again = KMeans(x, {20, 300, seed});
    CHECK(again.assignments == r.assignments);
    CHECK(r.centroids.rows() == 20);
    CHECK(std::set<int>(r.assignments.begin(), r.assignments.end()).size() == 20);
  }
}

TEST_CASE("kmeans: duplicate points") {
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(10, 2);
  x(9, 0) = 1.0;
  KMeansResult r = KMeans(x, {3, 300, 1});
  CHECK(r.assignments.size() == 10);
  CHECK(std::isfinite(r.inertia));
}

}  // namespace phonacq
