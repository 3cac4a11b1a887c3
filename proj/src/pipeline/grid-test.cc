// src/pipeline/grid-test.cc

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

#include "pipeline/grid.h"

#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "test-util.h"
#include "toy-corpus.h"
#include "base/error.h"
#include "pipeline/experiment-config.h"

namespace phonacq {

static std::string WriteToyExperiment(const TempDir &dir) {
  MakeToyLanguage(dir.File("la"), "la", 400, 8, 1);
  MakeToyLanguage(dir.File("lb"), "lb", 650, 8, 2);
  std::ofstream os(dir.File("exp.json"));
  os << R"({
  "languages": [
    {"tag": "A", "manifest": "la/manifest.json", "inventory": "la/inventory.csv"},
    {"tag": "B", "manifest": "lb/manifest.json", "inventory": "lb/inventory.csv"}
  ],
  "train": {"epochs": 2, "batch_size": 64},
  "metrics": {"kmeans_k": 16, "hit_rate_trials": 10, "hit_rate_samples": 5,
              "contrast_features": ["back", "voiced"]},
  "seed": 5,
  "cache_dir": "cache",
  "train_segments": 300
})";
  return dir.File("exp.json");
}

TEST_CASE("compare_abx") {
  ConditionComparison c = CompareAbx("x", {0.1, 0.2, 0.15}, "y", {0.4, 0.5, 0.45});
  CHECK(c.valid);
  CHECK(c.mean_a == doctest::Approx(0.15));
  CHECK(c.welch.t < 0.0);
  CHECK(c.welch.p_value < 0.01);
  CHECK(!CompareAbx("x", {0.1}, "y", {0.2, 0.3}).valid);
}

TEST_CASE("experiment config parsing") {
  TempDir dir;
  ExperimentConfig c = ReadExperimentConfig(WriteToyExperiment(dir));
  REQUIRE(c.languages.size() == 2);
  CHECK(c.languages[1].tag == "B");
  CHECK(c.languages[0].manifest == dir.File("la/manifest.json"));
  CHECK(c.languages[0].EvalManifest() == c.languages[0].manifest);
  CHECK(c.train.epochs == 2);
  CHECK(c.train.learning_rate == 0.001);
  CHECK(c.model.hidden_dim == 3);
  CHECK(c.metrics.kmeans_k == 16);
  CHECK(c.seed == 5);
  CHECK(c.CacheDir() == dir.File("cache"));
  CHECK(c.LanguageCacheDir("B") == dir.File("cache/B"));
  WriteFileBytes(dir.File("bad.json"), "{\"languages\": [");
  CHECK_THROWS_AS(ReadExperimentConfig(dir.File("bad.json")), Error);
  CHECK_THROWS_AS(ReadExperimentConfig(dir.File("none.json")), Error);
}

TEST_CASE("run_grid: four cells, six comparisons, deterministic outputs") {
  TempDir dir;
  ExperimentConfig cfg = ReadExperimentConfig(WriteToyExperiment(dir));
  GridReport g = RunGrid(cfg, dir.File("out1"));
  CHECK(g.languages == std::vector<std::string>{"A", "B"});
  REQUIRE(g.cells.size() == 4);
  CHECK(g.cells[0].tag == "AA");
  CHECK(g.cells[1].tag == "AB");
  CHECK(g.cells[2].tag == "BB");
  CHECK(g.cells[3].tag == "BA");
  CHECK(g.comparisons.size() == 6);
  CHECK(g.histories[0].train_loss.size() == 2);
  for (const auto &c : g.cells) CHECK(c.abx.pairs.size() + c.abx.skipped_pairs == 4);
  for (const char *f : {"comparisons.csv", "grid.json", "summary.txt", "A.ckpt", "B.ckpt",
                        "AA/abx.csv", "BA/report.json"})
    CHECK(std::filesystem::exists(dir.File(std::string("out1/") + f)));
  // Both toy languages use the same recording ids.
  const std::string fa = ReadFileBytes(dir.File("cache/A/utt00000.phnf"));
  const std::string fb = ReadFileBytes(dir.File("cache/B/utt00000.phnf"));
  CHECK(!fa.empty());
  CHECK(fa != fb);

  RunGrid(cfg, dir.File("out2"));
  for (const char *f : {"comparisons.csv", "AA/abx.csv", "AB/contrasts.csv", "BB/embeddings.csv"})
    CHECK(ReadFileBytes(dir.File(std::string("out1/") + f)) ==
          ReadFileBytes(dir.File(std::string("out2/") + f)));
}

TEST_CASE("run_grid needs two languages") {
  ExperimentConfig cfg;
  cfg.languages.resize(1);
  CHECK_THROWS_AS(RunGrid(cfg, ""), Error);
}

TEST_CASE("dim_search") {
  TempDir dir;
  ExperimentConfig cfg = ReadExperimentConfig(WriteToyExperiment(dir));
  DimSearchReport r = DimSearch(cfg, {1, 2}, 1);
  REQUIRE(r.entries.size() == 2);
  CHECK(r.entries[0].hidden_dim == 1);
  CHECK(r.entries[1].hidden_dim == 2);
  CHECK(r.entries[0].n_embeddings > 0);
  WriteDimSearchCsv(r, dir.File("d.csv"));
  CHECK(ReadFileBytes(dir.File("d.csv")).find('\n') != std::string::npos);
  CHECK_THROWS_AS(DimSearch(cfg, {}, 1), Error);
}

}  // namespace phonacq
