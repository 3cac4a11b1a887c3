// src/metrics/embedding-test.cc

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

#include "metrics/embedding.h"

#include "doctest.h"
#include "test-util.h"
#include "base/error.h"

namespace phonacq {

TEST_CASE("embeddings CSV round trip") {
  TempDir dir;
  EmbeddingSet s = {{Eigen::Vector3d(0.1, -2.5e-7, 3.0), "ʂ", PhoneStatus::kPhoneme},
                    {Eigen::Vector3d(1.0 / 3.0, 2, -1), "pʰ", PhoneStatus::kAllophone}};
  WriteEmbeddingsCsv(s, dir.File("e.csv"));
  CHECK(ReadFileBytes(dir.File("e.csv")).rfind("label,status,d0,d1,d2\n", 0) == 0);
  EmbeddingSet r = ReadEmbeddingsCsv(dir.File("e.csv"));
  REQUIRE(r.size() == 2);
  CHECK(r[0].label == "ʂ");
  CHECK(r[1].status == PhoneStatus::kAllophone);
  CHECK(r[0].vector == s[0].vector);
  CHECK(r[1].vector == s[1].vector);
  CHECK(Labels(r) == std::vector<std::string>{"ʂ", "pʰ"});
  CHECK(WithLabel(r, "pʰ").size() == 1);
  CHECK(ToMatrix(r).rows() == 2);
}

TEST_CASE("embeddings CSV errors") {
  TempDir dir;
  WriteFileBytes(dir.File("bad.csv"), "name,d0\na,1\n");
  CHECK_THROWS_AS(ReadEmbeddingsCsv(dir.File("bad.csv")), Error);
  WriteFileBytes(dir.File("bad2.csv"), "label,status,d0\na,phoneme,x\n");
  CHECK_THROWS_AS(ReadEmbeddingsCsv(dir.File("bad2.csv")), Error);
  CHECK_THROWS_AS(ReadEmbeddingsCsv(dir.File("none.csv")), Error);
}

}  // namespace phonacq
