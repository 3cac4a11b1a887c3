// src/pipeline/scatter-test.cc

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

#include "pipeline/scatter.h"

#include <algorithm>
#include <numbers>

#include "doctest.h"
#include "test-util.h"
#include "base/error.h"
#include "base/random.h"

namespace phonacq {

static EmbeddingSet RandomEmbeddings(int dims, int per_class, uint64_t seed) {
  Rng rng(seed);
  EmbeddingSet s;
  for (const char *label : {"a", "i", "u"})
    for (int i = 0; i < per_class; ++i) {
      Eigen::VectorXd v(dims);
      for (int d = 0; d < dims; ++d) v[d] = rng.Normal();
      s.push_back({v, label, PhoneStatus::kPhoneme});
    }
  return s;
}

static size_t Lines(const std::string &s) { return std::count(s.begin(), s.end(), '\n'); }

TEST_CASE("project_point") {
  Rng rng(1);
  for (int i = 0; i < 20; ++i) {
    Eigen::Vector3d p(rng.Normal(), rng.Normal(), rng.Normal());
    Eigen::Vector2d id = ProjectPoint(p, {0, 0});
    CHECK(std::abs(id[0] - p[0]) < 1e-12);
    CHECK(std::abs(id[1] - p[1]) < 1e-12);
    Eigen::Vector2d q = ProjectPoint(p, {90, 0});
    CHECK(std::abs(q[0] + p[2]) < 1e-9);
    CHECK(std::abs(q[1] - p[1]) < 1e-9);
    // Rotations preserve the length of the full 3-D vector, so the projection never grows.
    CHECK(ProjectPoint(p, {37, -20}).norm() <= p.norm() + 1e-12);
  }
}

TEST_CASE("export_scatter: CSV rows and class filter") {
  TempDir dir;
  EmbeddingSet e = RandomEmbeddings(3, 10, 2);
  ScatterOptions o;
  o.csv_path = dir.File("s.csv");
  o.svg_path = dir.File("s.svg");
  CHECK(ExportScatter(e, o) == 30);
  const std::string csv = ReadFileBytes(o.csv_path);
  CHECK(csv.rfind("x,y,z,label\n", 0) == 0);
  CHECK(Lines(csv) == 31);
  const std::string svg = ReadFileBytes(o.svg_path);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find(">u<") != std::string::npos);
  o.classes = {"a", "u"};
  o.max_per_class = 4;
  CHECK(ExportScatter(e, o) == 8);
  CHECK(Lines(ReadFileBytes(o.csv_path)) == 9);
  CHECK(ReadFileBytes(o.csv_path).find(",i\n") == std::string::npos);
}

TEST_CASE("export_scatter: SVG needs three dimensions") {
  TempDir dir;
  EmbeddingSet e = RandomEmbeddings(5, 4, 3);
  ScatterOptions o;
  o.csv_path = dir.File("s.csv");
  CHECK(ExportScatter(e, o) == 12);
  CHECK(ReadFileBytes(o.csv_path).rfind("d0,d1,d2,d3,d4,label\n", 0) == 0);
  o.svg_path = dir.File("s.svg");
  try {
    ExportScatter(e, o);
    FAIL("expected an error");
  } catch (const Error &err) {
    CHECK(err.code() == ErrorCode::kDimensionMismatch);
  }
}

TEST_CASE("export_scatter is deterministic") {
  TempDir dir;
  EmbeddingSet e = RandomEmbeddings(3, 50, 4);
  ScatterOptions o;
  o.max_per_class = 10;
  o.seed = 5;
  o.csv_path = dir.File("a.csv");
  ExportScatter(e, o);
  o.csv_path = dir.File("b.csv");
  ExportScatter(e, o);
  CHECK(ReadFileBytes(dir.File("a.csv")) == ReadFileBytes(dir.File("b.csv")));
}

}  // namespace phonacq
