// src/metrics/hcv-test.cc

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

#include "metrics/hcv.h"

#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "oracles.h"
#include "base/error.h"
#include "base/random.h"

namespace phonacq {

static void CheckAgainstOracle(const std::vector<int> &cls, const std::vector<int> &clu) {
  HcvScores s = Hcv(cls, clu);
  oracle::Hcv o = oracle::HcvOracle(cls, clu);
  CHECK(std::abs(s.homogeneity - o.h) < 1e-9);
  CHECK(std::abs(s.completeness - o.c) < 1e-9);
  CHECK(std::abs(s.v_measure - o.v) < 1e-9);
}

TEST_CASE("hcv: hand examples") {
  HcvScores p = Hcv(std::vector<int>{0, 0, 1, 1}, std::vector<int>{5, 5, 7, 7});
  CHECK(p.homogeneity == doctest::Approx(1.0));
  CHECK(p.completeness == doctest::Approx(1.0));
  CHECK(p.v_measure == doctest::Approx(1.0));
  HcvScores z = Hcv(std::vector<int>{0, 0, 1, 1}, std::vector<int>{0, 1, 0, 1});
  CHECK(std::abs(z.homogeneity) < 1e-12);
  CHECK(std::abs(z.completeness) < 1e-12);
  CHECK(std::abs(z.v_measure) < 1e-12);
  CHECK_THROWS_AS(Hcv(std::vector<int>{0, 1}, std::vector<int>{0}), Error);
}

TEST_CASE("hcv matches the entropy oracle on small instances") {
  Rng rng(12);
  for (int inst = 0; inst < 50; ++inst) {
    const int n = 1 + static_cast<int>(rng.UniformInt(8));
    std::vector<int> cls(n), clu(n);
    for (int i = 0; i < n; ++i) {
      cls[i] = static_cast<int>(rng.UniformInt(3));
      clu[i] = static_cast<int>(rng.UniformInt(4));
    }
    CheckAgainstOracle(cls, clu);
  }
}

TEST_CASE("hcv: V = 1 exactly for bijective relabelings of 4-point labelings") {
  // All labelings of 4 items with up to 4 labels.
  std::vector<std::vector<int>> all;
  for (int code = 0; code < 256; ++code)
    all.push_back({code & 3, (code >> 2) & 3, (code >> 4) & 3, (code >> 6) & 3});
  auto bijective = [](const std::vector<int> &a, const std::vector<int> &b) {
    std::map<int, int> f, g;
    for (size_t i = 0; i < a.size(); ++i) {
      if (f.count(a[i]) && f[a[i]] != b[i]) return false;
      if (g.count(b[i]) && g[b[i]] != a[i]) return false;
      f[a[i]] = b[i];
      g[b[i]] = a[i];
    }
    return true;
  };
  for (size_t i = 0; i < all.size(); i += 7)
    for (size_t j = 0; j < all.size(); ++j) {
      const double v = Hcv(all[i], all[j]).v_measure;
      const oracle::Hcv o = oracle::HcvOracle(all[i], all[j]);
      CHECK(std::abs(v - o.v) < 1e-9);
      CHECK((std::abs(v - 1.0) < 1e-12) == bijective(all[i], all[j]));
    }
}

TEST_CASE("hcv is invariant to cluster relabeling") {
  Rng rng(2);
  std::vector<int> cls(200), clu(200);
  for (int i = 0; i < 200; ++i) {
    cls[i] = static_cast<int>(rng.UniformInt(5));
    clu[i] = static_cast<int>(rng.UniformInt(9));
  }
  std::vector<int> perm(9);
  std::iota(perm.begin(), perm.end(), 0);
  std::reverse(perm.begin(), perm.end());
  std::vector<int> relabeled(200);
  for (int i = 0; i < 200; ++i) relabeled[i] = 100 + perm[clu[i]];
  HcvScores a = Hcv(cls, clu), b = Hcv(cls, relabeled);
  CHECK(a.homogeneity == doctest::Approx(b.homogeneity).epsilon(1e-12));
  CHECK(a.completeness == doctest::Approx(b.completeness).epsilon(1e-12));
  CHECK(a.v_measure == doctest::Approx(b.v_measure).epsilon(1e-12));
}

TEST_CASE("random baseline") {
  Rng rng(4);
  std::vector<std::string> labels(10000);
  const char *names[] = {"a", "i", "u", "s", "m"};
  for (auto &l : labels) l = names[rng.UniformInt(5)];
  HcvScores b = RandomBaselineHcv(labels, 256, 7);
  CHECK(b.v_measure < 0.05);
  CHECK(RandomBaselineHcv(labels, 256, 7).v_measure == b.v_measure);
  CHECK_THROWS_AS(RandomBaselineHcv({}, 256, 1), Error);
  CHECK(EncodeLabels({"x", "y", "x", "z"}) == std::vector<int>{0, 1, 0, 2});
}

}  // namespace phonacq
