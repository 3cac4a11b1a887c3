// src/corpus/manifest-test.cc

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

#include "corpus/manifest.h"

#include <map>
#include <set>

#include "doctest.h"
#include "test-util.h"
#include "base/error.h"

namespace phonacq {

static DatasetManifest MakeManifest(int n_speakers, int per_speaker) {
  DatasetManifest m;
  m.language = "english";
  for (int s = 0; s < n_speakers; ++s)
    for (int u = 0; u < per_speaker; ++u) {
      std::string id = "s" + std::to_string(s) + "u" + std::to_string(u);
      m.entries.push_back({id, id + ".wav", id + ".tsv", "spk" + std::to_string(s), Split::kTrain});
    }
  return m;
}

TEST_CASE("default split counts") {
  auto en = DefaultSplitCounts("english");
  CHECK(en.train == 25);
  CHECK(en.validation == 5);
  CHECK(en.evaluation == 10);
  auto zh = DefaultSplitCounts("mandarin");
  CHECK(zh.train == 40);
  CHECK(zh.validation == 8);
  CHECK(zh.evaluation == 16);
}

TEST_CASE("speaker splits are disjoint and sized") {
  DatasetManifest m = MakeManifest(40, 3);
  AssignSplitsBySpeaker(&m, DefaultSplitCounts("english"), 9);
  ValidateManifest(m);
  std::map<Split, std::set<std::string>> spk;
  for (const auto &e : m.entries) spk[e.split].insert(e.speaker_id);
  CHECK(spk[Split::kTrain].size() == 25);
  CHECK(spk[Split::kValidation].size() == 5);
  CHECK(spk[Split::kEvaluation].size() == 10);
  CHECK(m.EntriesIn(Split::kTrain).size() == 75);
}

TEST_CASE("speaker splits scale down for small corpora") {
  DatasetManifest m = MakeManifest(8, 2);
  AssignSplitsBySpeaker(&m, {25, 5, 10}, 1);
  ValidateManifest(m);
  CHECK(!m.EntriesIn(Split::kTrain).empty());
  DatasetManifest one = MakeManifest(1, 4);
  AssignSplitsBySpeaker(&one, {25, 5, 10}, 1);
  CHECK(one.EntriesIn(Split::kTrain).size() == 4);
}

TEST_CASE("split assignment is a function of the seed") {
  DatasetManifest a = MakeManifest(20, 1), b = MakeManifest(20, 1);
  AssignSplitsBySpeaker(&a, {10, 5, 5}, 77);
  AssignSplitsBySpeaker(&b, {10, 5, 5}, 77);
  for (size_t i = 0; i < a.entries.size(); ++i) CHECK(a.entries[i].split == b.entries[i].split);
}

TEST_CASE("validate_manifest rejects speaker overlap and duplicates") {
  DatasetManifest m = MakeManifest(2, 2);
  m.entries[1].split = Split::kEvaluation;
  try {
    ValidateManifest(m);
    FAIL("expected an error");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kSplitOverlap);
  }
  DatasetManifest d = MakeManifest(1, 2);
  d.entries[1].recording_id = d.entries[0].recording_id;
  CHECK_THROWS_AS(ValidateManifest(d), Error);
  DatasetManifest n = MakeManifest(1, 1);
  n.entries[0].alignment_path.clear();
  CHECK_THROWS_AS(ValidateManifest(n), Error);
}

TEST_CASE("manifest JSON round trip resolves relative paths") {
  TempDir dir;
  DatasetManifest m = MakeManifest(3, 2);
  AssignSplitsBySpeaker(&m, {1, 1, 1}, 4);
  WriteManifest(m, dir.File("m.json"));
  DatasetManifest r = ReadManifest(dir.File("m.json"));
  CHECK(r.language == "english");
  REQUIRE(r.entries.size() == m.entries.size());
  for (size_t i = 0; i < m.entries.size(); ++i) {
    CHECK(r.entries[i].recording_id == m.entries[i].recording_id);
    CHECK(r.entries[i].speaker_id == m.entries[i].speaker_id);
    CHECK(r.entries[i].split == m.entries[i].split);
    CHECK(r.entries[i].audio_path == dir.File(m.entries[i].audio_path));
  }
}

}  // namespace phonacq
