// src/feat/feature-cache-test.cc

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

#include "feat/feature-cache.h"

#include <cstring>
#include <sstream>

#include "doctest.h"
#include "test-util.h"
#include "base/error.h"

namespace phonacq {

static ErrorCode ReadCode(const std::string &bytes) {
  std::istringstream is(bytes);
  try {
    ReadFeatureCache(is);
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::kInvalidArgument;
}

TEST_CASE("feature cache round trip is bitwise exact") {
  TempDir dir;
  FrameMatrix fm;
  fm.data = FloatMatrix::Random(37, 39);
  fm.data(3, 4) = -0.0f;
  fm.data(5, 6) = 1e-42f;  // denormal
  fm.frame_rate = 100.0f;
  WriteFeatureCache(fm, dir.File("a.phnf"));
  FrameMatrix r = ReadFeatureCache(dir.File("a.phnf"));
  REQUIRE(r.NumFrames() == 37);
  REQUIRE(r.NumCoeffs() == 39);
  CHECK(r.frame_rate == 100.0f);
  CHECK(std::memcmp(r.data.data(), fm.data.data(), sizeof(float) * fm.data.size()) == 0);
  CHECK(ReadFileBytes(dir.File("a.phnf")).size() == 4 + 2 + 4 + 4 + 4 + 37 * 39 * 4);
}

TEST_CASE("feature cache header layout") {
  FrameMatrix fm;
  fm.data = FloatMatrix::Zero(2, 3);
  std::ostringstream os;
  WriteFeatureCache(fm, os);
  const std::string b = os.str();
  CHECK(b.substr(0, 4) == "PHNF");
  CHECK(static_cast<uint8_t>(b[4]) == kFeatureCacheVersion);
  CHECK(static_cast<uint8_t>(b[6]) == 2);
  CHECK(static_cast<uint8_t>(b[10]) == 3);
}

TEST_CASE("feature cache: empty matrix round trips") {
  FrameMatrix fm;
  fm.data.resize(0, 39);
  std::ostringstream os;
  WriteFeatureCache(fm, os);
  std::istringstream is(os.str());
  FrameMatrix r = ReadFeatureCache(is);
  CHECK(r.NumFrames() == 0);
  CHECK(r.NumCoeffs() == 39);
}

TEST_CASE("feature cache: corruption is detected") {
  FrameMatrix fm;
  fm.data = FloatMatrix::Random(4, 39);
  std::ostringstream os;
  WriteFeatureCache(fm, os);
  std::string b = os.str();
  std::string bad = b;
  bad[0] = 'X';
  CHECK(ReadCode(bad) == ErrorCode::kVersionMismatch);
  bad = b;
  bad[4] = 9;
  CHECK(ReadCode(bad) == ErrorCode::kVersionMismatch);
  CHECK(ReadCode(b.substr(0, b.size() - 1)) == ErrorCode::kTruncated);
  CHECK(ReadCode(b.substr(0, 8)) == ErrorCode::kTruncated);
  CHECK(ReadCode("") == ErrorCode::kTruncated);
  TempDir dir;
  CHECK_THROWS_AS(ReadFeatureCache(dir.File("none.phnf")), Error);
}

}  // namespace phonacq
