// src/pipeline/condition-test.cc

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

#include "pipeline/condition.h"

#include <filesystem>

#include "doctest.h"
#include "test-util.h"
#include "toy-corpus.h"
#include "base/error.h"
#include "base/random.h"
#include "pipeline/corpus-features.h"

namespace phonacq {

static FeatureSystem ToyInventory() {
  return ParseInventory(
      "phone,category,status,back,voiced\n"
      "a,vowel,phoneme,+,0\n"
      "i,vowel,phoneme,-,0\n"
      "u,vowel,phoneme,+,0\n"
      "s,consonant,phoneme,0,-\n"
      "m,consonant,phoneme,0,+\n",
      "toy");
}

static EmbeddingSet Blobs(double spread, int per_class, uint64_t seed) {
  Rng rng(seed);
  EmbeddingSet s;
  const char *labels[] = {"a", "i", "u", "s", "m"};
  for (int c = 0; c < 5; ++c)
    for (int i = 0; i < per_class; ++i) {
      Eigen::Vector3d v(c * 5.0 + spread * rng.Normal(), (c % 2) * 5.0 + spread * rng.Normal(),
                        (c % 3) * 5.0 + spread * rng.Normal());
      s.push_back({v, labels[c], PhoneStatus::kPhoneme});
    }
  return s;
}

static MetricConfig SmallMetrics() {
  MetricConfig m;
  m.kmeans_k = 5;
  m.hit_rate_trials = 50;
  m.contrast_features = {"back", "voiced"};
  return m;
}

TEST_CASE("evaluate_condition on separated blobs") {
  ConditionReport r = EvaluateCondition("TT", Blobs(0.3, 60, 1), ToyInventory(), SmallMetrics(), 7);
  CHECK(r.n_embeddings == 300);
  CHECK(r.k == 5);
  CHECK(r.hcv.v_measure > 0.9);
  CHECK(r.baseline.v_measure < r.hcv.v_measure);
  CHECK(r.abx.pairs.size() == 3 + 1);
  CHECK(r.abx.mean < 0.05);
  REQUIRE(r.contrasts.size() == 2);
  for (const auto &c : r.contrasts) {
    CHECK(c.evaluated);
    CHECK(c.hit_rate == 1.0);
    CHECK(c.silhouette > 0.0);
  }
  ConditionReport again = EvaluateCondition("TT", Blobs(0.3, 60, 1), ToyInventory(), SmallMetrics(), 7);
  CHECK(ConditionReportToJson(again).dump() == ConditionReportToJson(r).dump());
}

TEST_CASE("evaluate_condition: small sets and unknown labels") {
  EmbeddingSet e = Blobs(1.0, 3, 2);
  e.push_back({Eigen::Vector3d(1, 2, 3), "zz", PhoneStatus::kPhoneme});
  MetricConfig m = SmallMetrics();
  m.kmeans_k = 256;
  ConditionReport r = EvaluateCondition("TT", e, ToyInventory(), m, 1);
  CHECK(r.k <= 16);
  for (const auto &c : r.contrasts) CHECK(!c.evaluated);
  CHECK_THROWS_AS(EvaluateCondition("TT", {}, ToyInventory(), m, 1), Error);
}

TEST_CASE("run_condition with an untrained model writes a well-formed report") {
  TempDir dir;
  MakeToyLanguage(dir.File("toy"), "toy", 400, 6, 3);
  DatasetManifest m = ReadManifest(dir.File("toy/manifest.json"));
  FeatureConfig fc;
  PrepareCache(dir.File("cache"), fc);
  ExtractToCache(m, fc, dir.File("cache"));
  Checkpoint ckpt;
  ckpt.params = InitModel<float>(ModelConfig());
  ckpt.features = fc;
  FeatureSystem inv = LoadInventory(dir.File("toy/inventory.csv"));
  MetricConfig mc = SmallMetrics();
  mc.kmeans_k = 256;
  mc.hit_rate_samples = 5;
  mc.hit_rate_trials = 20;
  EmbeddingSet emb;
  ConditionReport r = RunCondition("TT", ckpt, m, inv, mc, dir.File("cache"), 4, &emb);
  CHECK(r.n_embeddings == emb.size());
  CHECK(r.n_embeddings > 0);
  CHECK(r.k == static_cast<int>(std::min<size_t>(256, r.n_clustered)));
  CHECK(r.hcv.v_measure >= 0.0);
  CHECK(r.hcv.v_measure <= 1.0);
  WriteConditionOutputs(r, &emb, dir.File("out"));
  for (const char *f : {"report.json", "abx.csv", "contrasts.csv", "summary.txt", "embeddings.csv"})
    CHECK(std::filesystem::exists(dir.File(std::string("out/") + f)));
  auto j = nlohmann::json::parse(ReadFileBytes(dir.File("out/report.json")));
  CHECK(j["tag"] == "TT");
  CHECK(j["clustering"]["model"]["v_measure"] == r.hcv.v_measure);
  CHECK(j["abx"]["n_pairs"].get<size_t>() + j["abx"]["skipped_pairs"].get<size_t>() == 4);
  CHECK(ReadEmbeddingsCsv(dir.File("out/embeddings.csv")).size() == emb.size());
}

}  // namespace phonacq
