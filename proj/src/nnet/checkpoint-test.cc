// src/nnet/checkpoint-test.cc

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

#include "nnet/checkpoint.h"

#include <cstring>
#include <sstream>

#include "doctest.h"
#include "test-util.h"
#include "base/error.h"

namespace phonacq {

static Checkpoint MakeCheckpoint(int h) {
  ModelConfig cfg;
  cfg.hidden_dim = h;
  cfg.init_seed = 99;
  Checkpoint c;
  c.params = InitModel<float>(cfg);
  c.params.dec_out.bias.setConstant(0.25f);
  c.normalizer.mean = Eigen::RowVectorXf::Random(39);
  c.normalizer.sd = Eigen::RowVectorXf::Constant(39, 2.0f);
  c.features.win_len_s = 0.02;
  c.features.n_mel_filters = 40;
  c.features.fmax = 7000.0;
  return c;
}

TEST_CASE("checkpoint round trip is bitwise exact and records H") {
  TempDir dir;
  Checkpoint c = MakeCheckpoint(5);
  SaveCheckpoint(c, dir.File("m.ckpt"));
  Checkpoint r = LoadCheckpoint(dir.File("m.ckpt"));
  CHECK(r.params.config.hidden_dim == 5);
  CHECK(r.params.config.input_dim == 975);
  CHECK(r.params.config.init_seed == 99);
  auto a = c.params.Layers(), b = r.params.Layers();
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    REQUIRE(a[i]->weight.size() == b[i]->weight.size());
    CHECK(std::memcmp(a[i]->weight.data(), b[i]->weight.data(), 4 * a[i]->weight.size()) == 0);
    CHECK(a[i]->bias == b[i]->bias);
  }
  CHECK(r.normalizer.mean == c.normalizer.mean);
  CHECK(r.normalizer.sd == c.normalizer.sd);
  CHECK(r.features.win_len_s == 0.02);
  CHECK(r.features.n_mel_filters == 40);
  CHECK(r.features.fmax == 7000.0);
  CHECK(ReadFileBytes(dir.File("m.ckpt")).substr(0, 4) == "PHNA");
}

TEST_CASE("checkpoint corruption") {
  std::ostringstream os;
  SaveCheckpoint(MakeCheckpoint(3), os);
  std::string b = os.str();
  auto code = [](const std::string &bytes) {
    std::istringstream is(bytes);
    try {
      LoadCheckpoint(is);
    } catch (const Error &e) {
      return e.code();
    }
    return ErrorCode::kInvalidArgument;
  };
  std::string bad = b;
  bad[1] = 'Z';
  CHECK(code(bad) == ErrorCode::kVersionMismatch);
  CHECK(code(b.substr(0, b.size() / 2)) == ErrorCode::kTruncated);
  CHECK(code(b.substr(0, 2)) == ErrorCode::kTruncated);
  TempDir dir;
  CHECK_THROWS_AS(LoadCheckpoint(dir.File("missing")), Error);
}

}  // namespace phonacq
