// src/corpus/alignment-test.cc

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

#include "corpus/alignment.h"

#include "doctest.h"
#include "test-util.h"
#include "base/error.h"

namespace phonacq {

static ErrorCode CodeOf(const std::string &text) {
  try {
    ParseAlignmentText(text);
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::kInvalidArgument;
}

TEST_CASE("parse_alignment: empty file") {
  TempDir dir;
  WriteFileBytes(dir.File("a.tsv"), "");
  CHECK(ParseAlignment(dir.File("a.tsv")).empty());
  CHECK(ParseAlignmentText("\n\n").empty());
}

TEST_CASE("parse_alignment: two phone tokens in order") {
  auto t = ParseAlignmentText("0.0\t0.1\tt\n0.1\t0.25\ta\n");
  REQUIRE(t.size() == 2);
  CHECK(t[0].label == "t");
  CHECK(t[0].start_s == 0.0);
  CHECK(t[0].end_s == 0.1);
  CHECK(t[0].tier == Tier::kPhone);
  CHECK(t[1].label == "a");
  CHECK(t[1].start_s == 0.1);
  CHECK(t[1].end_s == 0.25);
}

TEST_CASE("parse_alignment: unsorted lines are sorted, tiers mapped") {
  auto t = ParseAlignmentText("0.3\t0.4\tNOISE\n0.0\t0.1\tSIL\n0.1\t0.3\tə\n");
  REQUIRE(t.size() == 3);
  CHECK(t[0].tier == Tier::kSilence);
  CHECK(t[1].label == "ə");
  CHECK(t[1].tier == Tier::kPhone);
  CHECK(t[2].tier == Tier::kNoise);
}

TEST_CASE("parse_alignment: errors") {
  CHECK(CodeOf("0.2\t0.1\tt\n") == ErrorCode::kReversedInterval);
  CHECK(CodeOf("0.1\t0.1\tt\n") == ErrorCode::kReversedInterval);
  CHECK(CodeOf("0.0\t0.2\tt\n0.1\t0.3\ta\n") == ErrorCode::kOverlappingInterval);
  CHECK(CodeOf("0.0\tabc\tt\n") == ErrorCode::kParse);
  CHECK(CodeOf("0.0\t0.1\n") == ErrorCode::kParse);
  CHECK(CodeOf("-0.1\t0.1\tt\n") == ErrorCode::kParse);
  try {
    ParseAlignmentText("0.0\t0.1\tt\n\n0.2\tx\ta\n", "f.tsv");
  } catch (const Error &e) {
    CHECK(std::string(e.what()).find("f.tsv:3") != std::string::npos);
  }
}

TEST_CASE("write_alignment round trip") {
  TempDir dir;
  std::vector<AlignedToken> t = {{"SIL", 0.0, 0.05, Tier::kSilence},
                                 {"a", 0.05, 0.171, Tier::kPhone},
                                 {"NOISE", 0.2, 0.3, Tier::kNoise}};
  WriteAlignment(t, dir.File("w.tsv"));
  auto r = ParseAlignment(dir.File("w.tsv"));
  REQUIRE(r.size() == t.size());
  for (size_t i = 0; i < t.size(); ++i) {
    CHECK(r[i].label == t[i].label);
    CHECK(r[i].start_s == doctest::Approx(t[i].start_s).epsilon(1e-9));
    CHECK(r[i].end_s == doctest::Approx(t[i].end_s).epsilon(1e-9));
    CHECK(r[i].tier == t[i].tier);
  }
}

}  // namespace phonacq
