// src/pipeline/grid.cc

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

#include <algorithm>
#include <cstdio>
#include <filesystem>

#include "base/error.h"
#include "base/log.h"
#include "base/random.h"
#include "metrics/kmeans.h"
#include "pipeline/training.h"

namespace phonacq {

namespace fs = std::filesystem;

ConditionComparison CompareAbx(const std::string &a, const std::vector<double> &errors_a,
                               const std::string &b, const std::vector<double> &errors_b) {
  ConditionComparison c;
  c.a = a;
  c.b = b;
  c.n_a = errors_a.size();
  c.n_b = errors_b.size();
  auto mean = [](const std::vector<double> &v) {
    double s = 0.0;
    for (double x : v) s += x;
    return v.empty() ? 0.0 : s / v.size();
  };
  c.mean_a = mean(errors_a);
  c.mean_b = mean(errors_b);
  if (c.n_a >= 2 && c.n_b >= 2) {
    try {
      c.welch = WelchTTest(errors_a, errors_b);
      c.valid = true;
    } catch (const Error &e) {
      PHONACQ_WARN << a << " vs " << b << ": " << e.what();
    }
  }
  return c;
}

GridReport RunGrid(const ExperimentConfig &cfg, const std::string &out_dir) {
  if (cfg.languages.size() != 2)
    Fail(ErrorCode::kInvalidArgument, "grid needs exactly two languages, got " +
                                          std::to_string(cfg.languages.size()));
  cfg.Check();
  std::vector<std::string> caches;
  for (const auto &lang : cfg.languages) {
    caches.push_back(cfg.LanguageCacheDir(lang.tag));
    PrepareCache(caches.back(), cfg.features);
  }
  if (!out_dir.empty()) EnsureDirectory(out_dir);
  const fs::path out(out_dir);

  GridReport g;
  std::vector<DatasetManifest> eval_manifests;
  std::vector<FeatureSystem> inventories;
  std::vector<Checkpoint> models;
  for (size_t li = 0; li < cfg.languages.size(); ++li) {
    const LanguageConfig &lang = cfg.languages[li];
    g.languages.push_back(lang.tag);
    const DatasetManifest m = ReadManifest(lang.manifest);
    eval_manifests.push_back(ReadManifest(lang.EvalManifest()));
    inventories.push_back(LoadInventory(lang.inventory));
    PHONACQ_LOG << "training " << lang.tag;
    TrainingRun run = TrainLanguage(m, cfg.features, caches[li], cfg.model, cfg.train,
                                    cfg.train_segments, DeriveSeed(cfg.seed, "train:" + lang.tag));
    if (!out_dir.empty()) {
      SaveCheckpoint(run.checkpoint, (out / (lang.tag + ".ckpt")).string());
      WriteHistoryJson(run.history, (out / (lang.tag + ".history.json")).string());
    }
    g.histories.push_back(std::move(run.history));
    models.push_back(std::move(run.checkpoint));
  }

  const size_t order[4][2] = {{0, 0}, {0, 1}, {1, 1}, {1, 0}};
  for (const auto &[ti, ei] : order) {
    const std::string tag = cfg.languages[ti].tag + cfg.languages[ei].tag;
    PHONACQ_LOG << "evaluating " << tag;
    EmbeddingSet emb;
    ConditionReport r = RunCondition(tag, models[ti], eval_manifests[ei], inventories[ei],
                                     cfg.metrics, caches[ei], DeriveSeed(cfg.seed, "cell:" + tag),
                                     &emb);
    if (!out_dir.empty()) WriteConditionOutputs(r, &emb, (out / tag).string());
    g.cells.push_back(std::move(r));
  }

  for (size_t i = 0; i < g.cells.size(); ++i)
    for (size_t j = i + 1; j < g.cells.size(); ++j)
      g.comparisons.push_back(CompareAbx(g.cells[i].tag, g.cells[i].abx.Errors(),
                                         g.cells[j].tag, g.cells[j].abx.Errors()));
  std::vector<double> exposed, foreign;
  for (size_t c = 0; c < 4; ++c) {
    auto e = g.cells[c].abx.Errors();
    auto &dst = order[c][0] == order[c][1] ? exposed : foreign;
    dst.insert(dst.end(), e.begin(), e.end());
  }
  g.pooled = CompareAbx("exposed", exposed, "foreign", foreign);

  if (!out_dir.empty()) {
    WriteComparisonsCsv(g, (out / "comparisons.csv").string());
    WriteTextFile(GridReportToJson(g).dump(2) + "\n", (out / "grid.json").string());
    WriteTextFile(FormatGridSummary(g), (out / "summary.txt").string());
  }
  return g;
}

namespace {

nlohmann::ordered_json ComparisonJson(const ConditionComparison &c) {
  nlohmann::ordered_json j;
  j["a"] = c.a;
  j["b"] = c.b;
  j["mean_a"] = c.mean_a;
  j["mean_b"] = c.mean_b;
  j["n_a"] = c.n_a;
  j["n_b"] = c.n_b;
  j["valid"] = c.valid;
  if (c.valid) {
    j["t"] = c.welch.t;
    j["df"] = c.welch.df;
    j["p_value"] = c.welch.p_value;
  }
  return j;
}

}  // namespace

nlohmann::ordered_json GridReportToJson(const GridReport &g) {
  nlohmann::ordered_json j;
  j["languages"] = g.languages;
  nlohmann::ordered_json hist = nlohmann::ordered_json::array();
  for (const auto &h : g.histories) {
    nlohmann::ordered_json jh;
    jh["best_epoch"] = h.best_epoch;
    jh["train_loss"] = h.train_loss;
    jh["val_loss"] = h.val_loss;
    hist.push_back(jh);
  }
  j["histories"] = hist;
  nlohmann::ordered_json cells = nlohmann::ordered_json::array();
  for (const auto &c : g.cells) cells.push_back(ConditionReportToJson(c));
  j["cells"] = cells;
  nlohmann::ordered_json comps = nlohmann::ordered_json::array();
  for (const auto &c : g.comparisons) comps.push_back(ComparisonJson(c));
  j["comparisons"] = comps;
  j["pooled"] = ComparisonJson(g.pooled);
  return j;
}

void WriteComparisonsCsv(const GridReport &g, const std::string &path) {
  std::FILE *f = std::fopen(path.c_str(), "w");
  if (!f) Fail(ErrorCode::kUnwritable, "cannot write " + path);
  std::fprintf(f, "a,b,mean_a,mean_b,n_a,n_b,t,df,p_value\n");
  std::vector<const ConditionComparison *> rows;
  for (const auto &c : g.comparisons) rows.push_back(&c);
  rows.push_back(&g.pooled);
  for (const auto *c : rows) {
    std::fprintf(f, "%s,%s,%.17g,%.17g,%zu,%zu,", c->a.c_str(), c->b.c_str(), c->mean_a,
                 c->mean_b, c->n_a, c->n_b);
    if (c->valid)
      std::fprintf(f, "%.17g,%.17g,%.17g\n", c->welch.t, c->welch.df, c->welch.p_value);
    else
      std::fprintf(f, ",,\n");
  }
  if (std::fclose(f) != 0) Fail(ErrorCode::kUnwritable, "write failed: " + path);
}

std::string FormatGridSummary(const GridReport &g) {
  std::string s;
  char buf[256];
  s += "cell  V-measure  baseline V  ABX mean  ABX sd  pairs\n";
  for (const auto &c : g.cells) {
    std::snprintf(buf, sizeof(buf), "%-5s %9.3f  %10.3f  %8.3f  %6.3f  %5zu\n", c.tag.c_str(),
                  c.hcv.v_measure, c.baseline.v_measure, c.abx.mean, c.abx.sd,
                  c.abx.pairs.size());
    s += buf;
  }
  s += "\nABX comparisons (Welch)\n";
  std::vector<const ConditionComparison *> rows;
  for (const auto &c : g.comparisons) rows.push_back(&c);
  rows.push_back(&g.pooled);
  for (const auto *c : rows) {
    if (c->valid)
      std::snprintf(buf, sizeof(buf), "%-8s vs %-8s  %.3f vs %.3f  t=%.3f  df=%.1f  p=%.3g\n",
                    c->a.c_str(), c->b.c_str(), c->mean_a, c->mean_b, c->welch.t, c->welch.df,
                    c->welch.p_value);
    else
      std::snprintf(buf, sizeof(buf), "%-8s vs %-8s  %.3f vs %.3f  not tested\n", c->a.c_str(),
                    c->b.c_str(), c->mean_a, c->mean_b);
    s += buf;
  }
  return s;
}

DimSearchReport DimSearch(const ExperimentConfig &cfg, const std::vector<int> &hidden_dims,
                          int epochs) {
  if (hidden_dims.empty()) Fail(ErrorCode::kInvalidArgument, "no hidden sizes to search");
  if (epochs < 1) Fail(ErrorCode::kInvalidArgument, "epochs must be positive");
  cfg.Check();
  const LanguageConfig &lang = cfg.languages.front();
  const std::string cache = cfg.LanguageCacheDir(lang.tag);
  PrepareCache(cache, cfg.features);
  const DatasetManifest m = ReadManifest(lang.manifest);
  const FeatureSystem inventory = LoadInventory(lang.inventory);
  const uint64_t seed = DeriveSeed(cfg.seed, "dimsearch:" + lang.tag);
  const PreparedTraining data =
      PrepareTraining(m, cfg.features, cache, cfg.train_segments, seed);
  auto labeled = m.EntriesIn(Split::kValidation);
  if (labeled.empty()) {
    PHONACQ_WARN << "no validation recordings; scoring the evaluation split";
    labeled = EvaluationEntries(m);
  }

  DimSearchReport report;
  report.language = lang.tag;
  report.epochs = epochs;
  for (int h : hidden_dims) {
    ModelConfig model = cfg.model;
    model.hidden_dim = h;
    TrainConfig train = cfg.train;
    train.epochs = epochs;
    PHONACQ_LOG << "hidden size " << h;
    const TrainingRun run =
        TrainOnPrepared(data, cfg.features, model, train, DeriveSeed(seed, "H" + std::to_string(h)));
    const EncodedTokens enc = EncodeTokens(run.checkpoint, labeled, cache, &inventory);
    if (enc.embeddings.empty())
      Fail(ErrorCode::kEmptyInput, "no labeled validation tokens to score");
    DimSearchEntry e;
    e.hidden_dim = h;
    e.best_epoch = run.history.best_epoch;
    e.best_val_loss = run.history.val_loss.at(static_cast<size_t>(e.best_epoch));
    e.n_embeddings = enc.embeddings.size();
    e.k = std::min<int>(cfg.metrics.kmeans_k, static_cast<int>(e.n_embeddings));
    KMeansOptions km;
    km.k = e.k;
    km.max_iterations = cfg.metrics.kmeans_max_iterations;
    km.seed = DeriveSeed(seed, "kmeans:H" + std::to_string(h));
    e.hcv = Hcv(Labels(enc.embeddings), KMeans(ToMatrix(enc.embeddings), km).assignments);
    report.entries.push_back(e);
  }
  return report;
}

void WriteDimSearchCsv(const DimSearchReport &r, const std::string &path) {
  std::FILE *f = std::fopen(path.c_str(), "w");
  if (!f) Fail(ErrorCode::kUnwritable, "cannot write " + path);
  std::fprintf(f, "hidden_dim,best_epoch,best_val_loss,n_embeddings,k,homogeneity,"
                  "completeness,v_measure\n");
  for (const auto &e : r.entries)
    std::fprintf(f, "%d,%d,%.17g,%zu,%d,%.17g,%.17g,%.17g\n", e.hidden_dim, e.best_epoch,
                 e.best_val_loss, e.n_embeddings, e.k, e.hcv.homogeneity, e.hcv.completeness,
                 e.hcv.v_measure);
  if (std::fclose(f) != 0) Fail(ErrorCode::kUnwritable, "write failed: " + path);
}

nlohmann::ordered_json DimSearchToJson(const DimSearchReport &r) {
  nlohmann::ordered_json j;
  j["language"] = r.language;
  j["epochs"] = r.epochs;
  nlohmann::ordered_json es = nlohmann::ordered_json::array();
  for (const auto &e : r.entries) {
    nlohmann::ordered_json je;
    je["hidden_dim"] = e.hidden_dim;
    je["best_epoch"] = e.best_epoch;
    je["best_val_loss"] = e.best_val_loss;
    je["n_embeddings"] = e.n_embeddings;
    je["k"] = e.k;
    je["homogeneity"] = e.hcv.homogeneity;
    je["completeness"] = e.hcv.completeness;
    je["v_measure"] = e.hcv.v_measure;
    es.push_back(je);
  }
  j["entries"] = es;
  return j;
}

}  // namespace phonacq
