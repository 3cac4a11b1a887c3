// tests/acceptance/acceptance.cc

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

// Acceptance runner: one PASS/FAIL line per criterion.
//
//   acceptance [--only 1,4,8] [--work DIR] [--keep] [--cli PATH]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "oracles.h"
#include "base/error.h"
#include "base/log.h"
#include "base/random.h"
#include "corpus/synth.h"
#include "feat/mfcc.h"
#include "inventory/inventory.h"
#include "metrics/abx.h"
#include "metrics/hcv.h"
#include "metrics/normalize.h"
#include "metrics/silhouette.h"
#include "metrics/stat-tests.h"
#include "pipeline/condition.h"
#include "pipeline/corpus-features.h"
#include "pipeline/experiment-config.h"
#include "pipeline/grid.h"
#include "pipeline/training.h"

namespace fs = std::filesystem;

namespace phonacq {
namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Context {
  std::string data;  // bundled data directory
  std::string work;  // scratch directory
  std::string cli;   // path of the command-line tool
};

std::string Fmt(const char *fmt, double a) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), fmt, a);
  return buf;
}

std::string Fmt(const char *fmt, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), fmt, a, b);
  return buf;
}

Eigen::MatrixXd Gaussian(Rng *rng, int n, int d, double shift = 0.0) {
  Eigen::MatrixXd m(n, d);
  for (int i = 0; i < m.size(); ++i) m.data()[i] = rng->Normal() + shift;
  return m;
}

// 1. Backprop against central differences on 20 small networks.
Outcome GradientOracle(const Context &) {
  double worst = 0.0;
  for (uint64_t seed = 1; seed <= 20; ++seed) worst = std::max(worst, oracle::GradientCheck(seed));
  return {worst < 1e-4, Fmt("max relative error %.3g over 20 networks", worst)};
}

// 2. Metrics against brute-force oracles on small instances.
Outcome MetricOracles(const Context &) {
  Rng rng(2024);
  int fails = 0, n_hcv = 0, n_abx = 0, n_sil = 0, n_hot = 0;
  for (int inst = 0; inst < 20; ++inst) {
    const int n = 1 + static_cast<int>(rng.UniformInt(8));
    std::vector<int> cls(n), clu(n);
    for (int i = 0; i < n; ++i) {
      cls[i] = static_cast<int>(rng.UniformInt(3));
      clu[i] = static_cast<int>(rng.UniformInt(4));
    }
    const HcvScores s = Hcv(cls, clu);
    const oracle::Hcv o = oracle::HcvOracle(cls, clu);
    fails += std::abs(s.homogeneity - o.h) > 1e-9 || std::abs(s.completeness - o.c) > 1e-9 ||
             std::abs(s.v_measure - o.v) > 1e-9;
    ++n_hcv;
  }
  for (int inst = 0; inst < 20; ++inst) {
    const int na = 2 + static_cast<int>(rng.UniformInt(3)), nb = 2 + static_cast<int>(rng.UniformInt(3));
    const int d = 1 + static_cast<int>(rng.UniformInt(3));
    Eigen::MatrixXd a(na, d), b(nb, d);
    // Small integer grid so that distance ties occur.
    for (int i = 0; i < a.size(); ++i) a.data()[i] = static_cast<double>(rng.UniformInt(4));
    for (int i = 0; i < b.size(); ++i) b.data()[i] = static_cast<double>(rng.UniformInt(4));
    fails += AbxError(a, b) != oracle::Abx(a, b);
    ++n_abx;
  }
  for (int inst = 0; inst < 20; ++inst) {
    const int na = 1 + static_cast<int>(rng.UniformInt(4)), nb = 1 + static_cast<int>(rng.UniformInt(4));
    Eigen::MatrixXd a = Gaussian(&rng, na, 2), b = Gaussian(&rng, nb, 2, 1.0);
    fails += std::abs(SilhouettePair(a, b) - oracle::Silhouette(a, b)) > 1e-9;
    ++n_sil;
  }
  for (int inst = 0; inst < 10; ++inst) {
    Eigen::MatrixXd a = Gaussian(&rng, 4, 2), b = Gaussian(&rng, 4, 2, 0.8);
    const HotellingResult r = HotellingT2(a, b);
    const oracle::Hotelling2d o = oracle::Hotelling2dOracle(a, b);
    fails += std::abs(r.t2 - o.t2) > 1e-9 * std::max(1.0, o.t2) || std::abs(r.p_value - o.p) > 1e-9;
    std::vector<double> x(4), y(4);
    Eigen::MatrixXd a1(4, 1), b1(4, 1);
    for (int i = 0; i < 4; ++i) {
      a1(i, 0) = x[i] = rng.Normal();
      b1(i, 0) = y[i] = rng.Normal() + 0.5;
    }
    const double t = oracle::PooledT(x, y);
    fails += std::abs(HotellingT2(a1, b1).t2 - t * t) > 1e-9;
    n_hot += 2;
  }
  std::ostringstream d;
  d << fails << " mismatches (hcv " << n_hcv << ", abx " << n_abx << ", silhouette " << n_sil
    << ", hotelling " << n_hot << " instances)";
  return {fails == 0, d.str()};
}

// 3. Null calibrations.
Outcome NullCalibrations(const Context &) {
  Rng rng(77);
  Eigen::MatrixXd a = Gaussian(&rng, 3000, 3), b = Gaussian(&rng, 3000, 3);
  HitRateConfig hc;
  hc.seed = 5;
  const double rate = HitRate(a, b, hc);
  Eigen::MatrixXd xa = Gaussian(&rng, 1500, 3), xb = Gaussian(&rng, 1500, 3);
  const double abx = AbxError(xa, xb);
  std::vector<double> p;
  for (int i = 0; i < 2000; ++i) p.push_back(HotellingT2(Gaussian(&rng, 25, 3), Gaussian(&rng, 25, 3)).p_value);
  const double ks = oracle::KsUniform(p);
  const bool ok = rate >= 0.03 && rate <= 0.07 && abx >= 0.45 && abx <= 0.55 && ks < 0.05;
  std::ostringstream d;
  d << "hit rate " << Fmt("%.3f", rate) << ", abx " << Fmt("%.3f", abx) << ", KS " << Fmt("%.3f", ks);
  return {ok, d.str()};
}

// 4. Frame arithmetic.
Outcome FrameArithmetic(const Context &) {
  FeatureConfig cfg;
  AudioBuffer buf;
  buf.samples.resize(16000);
  Rng rng(4);
  for (auto &s : buf.samples) s = static_cast<float>(0.1 * rng.Normal());
  const FrameMatrix m = ExtractFeatures(buf, cfg);
  AudioBuffer silent;
  silent.samples.assign(16000, 0.0f);
  const FrameMatrix z = ExtractFeatures(silent, cfg);
  FrameMatrix c;
  c.data = FloatMatrix::Constant(50, 13, -3.25f);
  const FrameMatrix cd = AppendDynamics(c);
  const bool zero = z.data.rightCols(26).isZero(0.0f) && cd.data.rightCols(26).isZero(0.0f);
  std::ostringstream d;
  d << m.NumFrames() << "x" << m.NumCoeffs() << " frames, constant-input deltas "
    << (zero ? "zero" : "non-zero");
  return {m.NumFrames() == 98 && m.NumCoeffs() == 39 && zero, d.str()};
}

// Renders a bundled synthetic spec and caches its features.
DatasetManifest PrepareCorpus(const Context &ctx, const std::string &name,
                              const FeatureConfig &fc, std::string *cache) {
  const std::string dir = ctx.work + "/" + name;
  const std::string manifest = dir + "/manifest.json";
  *cache = dir + "-cache";
  if (!fs::exists(manifest)) {
    const SynthSpec spec = ReadSynthSpec(ctx.data + "/synth/" + name + ".json");
    WriteManifest(SynthesizeCorpus(spec, dir), manifest);
  }
  DatasetManifest m = ReadManifest(manifest);
  PrepareCache(*cache, fc);
  ExtractToCache(m, fc, *cache);
  return m;
}

// 5. End-to-end exposed learning on the five-class corpus.
Outcome ExposedLearning(const Context &ctx) {
  const FeatureConfig fc = ReadFeatureConfig(ctx.data + "/config/features.json");
  const ModelConfig mc = ReadModelConfig(ctx.data + "/config/model.json");
  const TrainConfig tc = ReadTrainConfig(ctx.data + "/config/train.json");
  std::string cache;
  const DatasetManifest m = PrepareCorpus(ctx, "five-class", fc, &cache);
  double audio_s = 0.0;
  for (const auto &e : m.entries) audio_s += LoadWav(e.audio_path).DurationSeconds();
  TrainingRun run = TrainLanguage(m, fc, cache, mc, tc, 0, 1);
  const auto &loss = run.history.train_loss;
  const FeatureSystem inv = LoadInventory(ctx.data + "/inventory/synthetic.csv");
  MetricConfig metrics;
  const ConditionReport r = RunCondition("SS", run.checkpoint, m, inv, metrics, cache, 2);
  const double ratio = loss.back() / loss.front();
  const bool ok = audio_s >= 20 * 60 && ratio < 0.5 && r.hcv.v_measure > 0.5 &&
                  r.baseline.v_measure < 0.05;
  std::ostringstream d;
  d << Fmt("%.1f min audio, ", audio_s / 60) << Fmt("loss %.4f -> %.4f", loss.front(), loss.back())
    << Fmt(" (ratio %.3f), ", ratio) << "V " << Fmt("%.3f", r.hcv.v_measure) << " (h "
    << Fmt("%.3f", r.hcv.homogeneity) << ", c " << Fmt("%.3f", r.hcv.completeness)
    << "), baseline V " << Fmt("%.3f", r.baseline.v_measure) << ", " << r.n_clustered
    << " tokens, k " << r.k;
  return {ok, d.str()};
}

ExperimentConfig CrossLanguageConfig(const Context &ctx) {
  ExperimentConfig cfg;
  cfg.features = ReadFeatureConfig(ctx.data + "/config/features.json");
  cfg.model = ReadModelConfig(ctx.data + "/config/model.json");
  cfg.train = ReadTrainConfig(ctx.data + "/config/train.json");
  std::string cache;
  for (const char *name : {"lang-a", "lang-b"}) {
    PrepareCorpus(ctx, name, cfg.features, &cache);
    LanguageConfig l;
    l.tag = name == std::string("lang-a") ? "A" : "B";
    l.manifest = ctx.work + "/" + name + "/manifest.json";
    l.inventory = ctx.data + "/inventory/" + name + ".csv";
    cfg.languages.push_back(l);
  }
  cfg.cache_dir = ctx.work + "/grid-cache";
  return cfg;
}

// 6. Exposed beats foreign ABX with Welch p < 0.05 on at least 3 of 4 seeds.
Outcome CrossLanguage(const Context &ctx) {
  ExperimentConfig cfg = CrossLanguageConfig(ctx);
  int wins = 0;
  std::ostringstream d;
  for (uint64_t seed = 1; seed <= 4; ++seed) {
    cfg.seed = seed;
    const GridReport g = RunGrid(cfg, "");
    const ConditionComparison &c = g.pooled;
    const bool win = c.valid && c.mean_a < c.mean_b && c.welch.p_value < 0.05;
    wins += win;
    d << (seed > 1 ? "; " : "") << "seed " << seed << ": "
      << Fmt("exposed %.3f vs foreign %.3f", c.mean_a, c.mean_b) << Fmt(" p %.2g", c.welch.p_value);
  }
  d << " -> " << wins << "/4";
  return {wins >= 3, d.str()};
}

// 7. V-measure rises from H = 1 to H = 3.
Outcome Dimensionality(const Context &ctx) {
  ExperimentConfig cfg;
  cfg.features = ReadFeatureConfig(ctx.data + "/config/features.json");
  cfg.model = ReadModelConfig(ctx.data + "/config/model.json");
  cfg.train = ReadTrainConfig(ctx.data + "/config/train.json");
  std::string cache;
  PrepareCorpus(ctx, "five-class", cfg.features, &cache);
  LanguageConfig l;
  l.tag = "S";
  l.manifest = ctx.work + "/five-class/manifest.json";
  l.inventory = ctx.data + "/inventory/synthetic.csv";
  cfg.languages.push_back(l);
  cfg.cache_dir = ctx.work + "/dim-cache";
  cfg.seed = 7;
  const DimSearchReport r = DimSearch(cfg, {1, 2, 3, 5, 8}, 50);
  std::map<int, double> v;
  std::ostringstream d;
  for (const auto &e : r.entries) {
    v[e.hidden_dim] = e.hcv.v_measure;
    d << (e.hidden_dim > 1 ? ", " : "") << "H=" << e.hidden_dim << " V " << Fmt("%.3f", e.hcv.v_measure);
  }
  d << " (" << r.epochs << " epochs)";
  return {v.at(3) > v.at(1), d.str()};
}

// 8. Normalization exactness.
Outcome Normalization(const Context &) {
  Rng rng(8);
  bool endpoints = true, moments = true;
  for (int trial = 0; trial < 20; ++trial) {
    EmbeddingSet s;
    for (int i = 0; i < 200; ++i) {
      Eigen::VectorXd v(3);
      for (int d = 0; d < 3; ++d) v[d] = (d + 1) * rng.Normal() + 10 * d;
      s.push_back({v, "a", PhoneStatus::kPhoneme});
    }
    const EmbeddingSet mm = MinmaxNormalize(s);
    const EmbeddingSet z = ZscoreNormalize(s);
    for (int d = 0; d < 3; ++d) {
      double lo = 2, hi = -2, mean = 0, var = 0;
      for (const auto &e : mm) {
        lo = std::min(lo, e.vector[d]);
        hi = std::max(hi, e.vector[d]);
      }
      endpoints = endpoints && lo == -1.0 && hi == 1.0;
      for (const auto &e : z) mean += e.vector[d];
      mean /= z.size();
      for (const auto &e : z) var += (e.vector[d] - mean) * (e.vector[d] - mean);
      var /= z.size();
      moments = moments && std::abs(mean) < 1e-9 && std::abs(std::sqrt(var) - 1.0) < 1e-9;
    }
  }
  EmbeddingSet ramp;
  for (int i = 1; i <= 1000; ++i)
    ramp.push_back({Eigen::VectorXd::Constant(1, i), "a", PhoneStatus::kPhoneme});
  const EmbeddingSet t = TrimOutliers(ramp, 0.005);
  const bool trim = t.size() == 990 && t.front().vector[0] == 6.0 && t.back().vector[0] == 995.0;
  std::ostringstream d;
  d << "min-max endpoints " << (endpoints ? "exact" : "off") << ", z-score moments "
    << (moments ? "within 1e-9" : "off") << ", trim kept " << t.size() << " points ("
    << t.front().vector[0] << ".." << t.back().vector[0] << ")";
  return {endpoints && moments && trim, d.str()};
}

int Shell(const std::string &cmd) {
  return std::system((cmd + " >/dev/null 2>&1").c_str());
}

// 9. Repeated CLI runs give byte-identical CSV reports.
Outcome Determinism(const Context &ctx) {
  const std::string root = ctx.work + "/determinism";
  fs::create_directories(root);
  SynthSpec spec = ReadSynthSpec(ctx.data + "/synth/lang-a.json");
  spec.n_utterances = 40;
  WriteSynthSpec(spec, root + "/spec.json");
  nlohmann::json train = {{"epochs", 3}, {"batch_size", 64}};
  std::ofstream(root + "/train.json") << train.dump();
  const std::string cfg = ctx.data + "/config/";
  const std::string q = "'";
  std::vector<std::string> failures;
  for (const char *run : {"r1", "r2"}) {
    const std::string d = root + "/" + run;
    fs::remove_all(d);
    fs::create_directories(d);
    nlohmann::json exp = {
        {"languages",
         {{{"tag", "A"}, {"manifest", root + "/corpus/manifest.json"},
           {"inventory", ctx.data + "/inventory/lang-a.csv"}},
          {{"tag", "B"}, {"manifest", root + "/corpus/manifest.json"},
           {"inventory", ctx.data + "/inventory/lang-a.csv"}}}},
        {"train", train},
        {"metrics", {{"hit_rate_trials", 20}}},
        {"seed", 3},
        {"cache_dir", d + "/grid-cache"}};
    std::ofstream(d + "/exp.json") << exp.dump();
    const std::vector<std::string> cmds = {
        "synth --spec " + root + "/spec.json --out " + root + "/corpus",
        "extract --manifest " + root + "/corpus/manifest.json --features " + cfg +
            "features.json --cache " + d + "/cache",
        "train --manifest " + root + "/corpus/manifest.json --cache " + d + "/cache --model " +
            cfg + "model.json --train " + root + "/train.json --out " + d + "/m.ckpt --seed 5",
        "encode --ckpt " + d + "/m.ckpt --manifest " + root + "/corpus/manifest.json --out " + d +
            "/emb.csv",
        "eval --ckpt " + d + "/m.ckpt --manifest " + root + "/corpus/manifest.json --inventory " +
            ctx.data + "/inventory/lang-a.csv --out " + d + "/eval --seed 9",
        "plot --embeddings " + d + "/emb.csv --classes a,i,u --azimuth 30 --elevation 20 --csv " +
            d + "/plot.csv --svg " + d + "/plot.svg",
        "dimsearch --config " + d + "/exp.json --hmin 1 --hmax 2 --epochs 2 --out " + d + "/dims.csv",
        "grid --config " + d + "/exp.json --out " + d + "/grid"};
    for (const auto &c : cmds)
      if (Shell(q + ctx.cli + q + " " + c) != 0) failures.push_back(std::string(run) + ": " + c.substr(0, c.find(' ')));
  }
  if (!failures.empty()) return {false, "command failed: " + failures.front()};
  size_t compared = 0;
  for (const auto &entry : fs::recursive_directory_iterator(root + "/r1")) {
    if (entry.path().extension() != ".csv") continue;
    const fs::path rel = fs::relative(entry.path(), root + "/r1");
    std::ifstream a(entry.path(), std::ios::binary), b(root + "/r2/" + rel.string(), std::ios::binary);
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    if (!b || sa.str() != sb.str()) failures.push_back(rel.string());
    ++compared;
  }
  std::ostringstream d;
  d << compared << " CSV reports compared, " << failures.size() << " differ";
  if (!failures.empty()) d << " (first: " << failures.front() << ")";
  return {compared > 0 && failures.empty(), d.str()};
}

// 10. Bundled inventories give 885 and 714 ABX pairs.
Outcome InventoryPairs(const Context &ctx) {
  const size_t en = EnumerateAbxPairs(LoadInventory(ctx.data + "/inventory/english.csv")).size();
  const size_t zh = EnumerateAbxPairs(LoadInventory(ctx.data + "/inventory/mandarin.csv")).size();
  std::ostringstream d;
  d << "english " << en << ", mandarin " << zh;
  return {en == 885 && zh == 714, d.str()};
}

struct Criterion {
  int id;
  const char *name;
  double budget_s;  // 0: none
  std::function<Outcome(const Context &)> run;
};

}  // namespace
}  // namespace phonacq

int main(int argc, char **argv) {
  using namespace phonacq;
  CLI::App app("acceptance criteria");
  std::vector<int> only;
  Context ctx;
  ctx.data = PHONACQ_DATA_DIR;
  ctx.cli = PHONACQ_CLI_PATH;
  bool keep = false;
  app.add_option("--only", only, "criteria to run")->delimiter(',');
  app.add_option("--work", ctx.work, "scratch directory");
  app.add_option("--data", ctx.data, "bundled data directory");
  app.add_option("--cli", ctx.cli, "command-line tool");
  app.add_flag("--keep", keep, "keep the scratch directory");
  CLI11_PARSE(app, argc, argv);
  const bool own_work = ctx.work.empty();
  if (own_work)
    ctx.work = (fs::temp_directory_path() / ("phonacq-acceptance-" + std::to_string(::getpid()))).string();
  fs::create_directories(ctx.work);
  SetVerbosity(0);

  const std::vector<Criterion> all = {
      {1, "gradient oracle", 10, GradientOracle},
      {2, "metric oracles", 5, MetricOracles},
      {3, "null calibrations", 60, NullCalibrations},
      {4, "frame arithmetic", 0, FrameArithmetic},
      {5, "end-to-end exposed learning", 600, ExposedLearning},
      {6, "cross-language direction", 1800, CrossLanguage},
      {7, "dimensionality trend", 1800, Dimensionality},
      {8, "normalization exactness", 0, Normalization},
      {9, "determinism", 0, Determinism},
      {10, "inventory consistency", 0, InventoryPairs},
  };
  int failed = 0;
  for (const auto &c : all) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run(ctx);
    } catch (const Error &e) {
      o = {false, std::string("error: ") + std::string(ErrorCodeName(e.code())) + ": " + e.what()};
    } catch (const std::exception &e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0 && secs > c.budget_s) {
      o.pass = false;
      o.detail += " [over the " + std::to_string(static_cast<int>(c.budget_s)) + " s budget]";
    }
    failed += !o.pass;
    std::printf("criterion %2d %-28s %s  %s (%.1f s)\n", c.id, c.name, o.pass ? "PASS" : "FAIL",
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  if (own_work && !keep) fs::remove_all(ctx.work);
  return failed == 0 ? 0 : 1;
}
