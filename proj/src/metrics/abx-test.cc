// src/metrics/abx-test.cc

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

#include "metrics/abx.h"

#include <Eigen/Geometry>

#include "doctest.h"
#include "oracles.h"
#include "test-util.h"
#include "base/error.h"
#include "base/random.h"

namespace phonacq {

static Eigen::MatrixXd Col(std::initializer_list<double> v) {
  Eigen::MatrixXd m(v.size(), 1);
  int i = 0;
  for (double x : v) m(i++, 0) = x;
  return m;
}

// Integer grid coordinates so that distance ties occur.
static Eigen::MatrixXd GridPoints(Rng *rng, int n, int d) {
  Eigen::MatrixXd m(n, d);
  for (int i = 0; i < m.size(); ++i) m.data()[i] = static_cast<double>(rng->UniformInt(4));
  return m;
}

TEST_CASE("abx: hand examples") {
  CHECK(AbxError(Col({0, 1}), Col({10})) == 0.0);
  CHECK(AbxDirectedError(Col({0, 2}), Col({1})) == 1.0);
  CHECK(AbxError(Col({0, 2}), Col({1})) == 1.0);
  // Tie: x = 0, a = 2, b = -2.
  CHECK(AbxDirectedError(Col({0, 2}), Col({-2})) == 0.5 * (0.5 + 0.0));
  CHECK_THROWS_AS(AbxError(Col({0}), Col({1})), Error);
  CHECK_THROWS_AS(AbxDirectedError(Col({0}), Col({1, 2})), Error);
}

TEST_CASE("abx matches triple enumeration on small instances") {
  Rng rng(3);
  for (int inst = 0; inst < 40; ++inst) {
    const int na = 2 + static_cast<int>(rng.UniformInt(3));
    const int nb = 2 + static_cast<int>(rng.UniformInt(3));
    const int d = 1 + static_cast<int>(rng.UniformInt(3));
    Eigen::MatrixXd a = GridPoints(&rng, na, d), b = GridPoints(&rng, nb, d);
    CHECK(AbxDirectedError(a, b) == oracle::AbxDirected(a, b));
    CHECK(AbxError(a, b) == oracle::Abx(a, b));
    CHECK(AbxError(a, b) == AbxError(b, a));
  }
}

TEST_CASE("abx is invariant under rotation and translation") {
  Rng rng(8);
  for (int inst = 0; inst < 10; ++inst) {
    Eigen::MatrixXd a(6, 3), b(5, 3);
    for (int i = 0; i < a.size(); ++i) a.data()[i] = rng.Normal();
    for (int i = 0; i < b.size(); ++i) b.data()[i] = rng.Normal() + 0.5;
    Eigen::Matrix3d r =
        Eigen::AngleAxisd(rng.Uniform() * 6.0, Eigen::Vector3d(rng.Normal(), rng.Normal(), 1).normalized())
            .toRotationMatrix();
    Eigen::RowVector3d t(rng.Normal(), rng.Normal(), rng.Normal());
    Eigen::MatrixXd ra = (a * r.transpose()).rowwise() + t, rb = (b * r.transpose()).rowwise() + t;
    CHECK(std::abs(AbxError(a, b) - AbxError(ra, rb)) < 1e-9);
  }
}

TEST_CASE("abx: same distribution gives about one half") {
  Rng rng(1);
  Eigen::MatrixXd a(1000, 3), b(1000, 3);
  for (int i = 0; i < a.size(); ++i) a.data()[i] = rng.Normal();
  for (int i = 0; i < b.size(); ++i) b.data()[i] = rng.Normal();
  const double e = AbxError(a, b);
  CHECK(e > 0.45);
  CHECK(e < 0.55);
}

static EmbeddingSet Blobs(const std::vector<std::pair<std::string, double>> &centers, int n,
                          uint64_t seed) {
  Rng rng(seed);
  EmbeddingSet set;
  for (const auto &[label, c] : centers)
    for (int i = 0; i < n; ++i) {
      Eigen::VectorXd v(2);
      v << c + 0.1 * rng.Normal(), -c + 0.1 * rng.Normal();
      set.push_back({v, label, PhoneStatus::kPhoneme});
    }
  return set;
}

TEST_CASE("abx_all_pairs") {
  EmbeddingSet set = Blobs({{"a", 0}, {"i", 5}, {"u", 10}, {"p", 15}, {"t", 20}, {"k", 25}}, 30, 2);
  std::vector<std::pair<std::string, std::string>> pairs = {
      {"a", "i"}, {"a", "u"}, {"i", "u"}, {"p", "t"}, {"p", "k"}, {"t", "k"}, {"a", "zz"}};
  AbxOptions opts;
  opts.seed = 4;
  AbxReport r = AbxAllPairs(set, pairs, opts);
  CHECK(r.pairs.size() == 6);
  CHECK(r.skipped_pairs == 1);
  CHECK(r.mean < 0.05);
  for (const auto &p : r.pairs) {
    CHECK(p.n_a > 0);
    CHECK(p.error >= 0.0);
    CHECK(p.error <= 1.0);
  }
  TempDir dir;
  WriteAbxCsv(r, dir.File("abx.csv"));
  const std::string csv = ReadFileBytes(dir.File("abx.csv"));
  CHECK(csv.rfind("phone_a,phone_b,error,n_a,n_b\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
  AbxReport again = AbxAllPairs(set, pairs, opts);
  CHECK(again.Errors() == r.Errors());
}

TEST_CASE("abx_all_pairs: overlapping classes near one half") {
  EmbeddingSet set = Blobs({{"a", 0}, {"b", 0}}, 400, 5);
  AbxReport r = AbxAllPairs(set, {{"a", "b"}});
  REQUIRE(r.pairs.size() == 1);
  CHECK(r.pairs[0].error > 0.45);
  CHECK(r.pairs[0].error < 0.55);
}

}  // namespace phonacq
