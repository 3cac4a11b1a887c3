// tools/phonacq.cc

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

// Command-line front end: corpus synthesis, feature extraction, training,
// encoding, evaluation, the two-language grid, the hidden-size search and
// scatter export.  Failures print one line
//   error: <code>: <message>
// on stderr and exit nonzero.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "base/error.h"
#include "base/log.h"
#include "corpus/manifest.h"
#include "corpus/synth.h"
#include "inventory/inventory.h"
#include "metrics/embedding.h"
#include "nnet/checkpoint.h"
#include "pipeline/condition.h"
#include "pipeline/corpus-features.h"
#include "pipeline/experiment-config.h"
#include "pipeline/grid.h"
#include "pipeline/scatter.h"
#include "pipeline/training.h"

namespace fs = std::filesystem;
using namespace phonacq;

namespace {

struct Args {
  std::string spec, out, manifest, features, cache, model, train, ckpt, inventory, config,
      embeddings, svg, csv;
  uint64_t seed = 0;
  bool seed_given = false;
  int hmin = 1, hmax = 15, epochs = 50;
  double azimuth = 0.0, elevation = 0.0;
  std::vector<std::string> classes;
};

int RunSynth(const Args &a) {
  SynthSpec spec = ReadSynthSpec(a.spec);
  if (a.seed_given) spec.seed = a.seed;
  EnsureDirectory(a.out);
  const DatasetManifest m = SynthesizeCorpus(spec, a.out);
  WriteManifest(m, (fs::path(a.out) / "manifest.json").string());
  std::printf("wrote %zu utterances to %s\n", m.entries.size(), a.out.c_str());
  return 0;
}

int RunExtract(const Args &a) {
  const DatasetManifest m = ReadManifest(a.manifest);
  const FeatureConfig cfg = ReadFeatureConfig(a.features);
  const size_t n = ExtractToCache(m, cfg, a.cache);
  std::printf("extracted %zu recordings (%zu already cached)\n", n, m.entries.size() - n);
  return 0;
}

int RunTrain(const Args &a) {
  const DatasetManifest m = ReadManifest(a.manifest);
  const FeatureConfig feats = ReadCacheConfig(a.cache);
  const ModelConfig model = ReadModelConfig(a.model);
  const TrainConfig train = ReadTrainConfig(a.train);
  const TrainingRun run = TrainLanguage(m, feats, a.cache, model, train, 0, a.seed);
  SaveCheckpoint(run.checkpoint, a.out);
  WriteHistoryJson(run.history, a.out + ".history.json");
  const auto &h = run.history;
  std::printf("trained %d epochs on %zu segments; best epoch %d (val loss %.6g)\n",
              static_cast<int>(h.train_loss.size()), run.n_train_segments, h.best_epoch + 1,
              h.val_loss.at(static_cast<size_t>(h.best_epoch)));
  return 0;
}

int RunEncode(const Args &a) {
  const Checkpoint ckpt = LoadCheckpoint(a.ckpt);
  const DatasetManifest m = ReadManifest(a.manifest);
  const EncodedTokens enc = EncodeTokens(ckpt, EvaluationEntries(m), "", nullptr);
  WriteEmbeddingsCsv(enc.embeddings, a.out);
  std::printf("encoded %zu tokens\n", enc.embeddings.size());
  return 0;
}

int RunEval(const Args &a) {
  const Checkpoint ckpt = LoadCheckpoint(a.ckpt);
  const DatasetManifest m = ReadManifest(a.manifest);
  const FeatureSystem inv = LoadInventory(a.inventory);
  EmbeddingSet emb;
  const ConditionReport r =
      RunCondition(m.language, ckpt, m, inv, MetricConfig{}, "", a.seed, &emb);
  WriteConditionOutputs(r, &emb, a.out);
  std::fputs(FormatConditionSummary(r).c_str(), stdout);
  return 0;
}

int RunGridCommand(const Args &a) {
  ExperimentConfig cfg = ReadExperimentConfig(a.config);
  cfg.output_dir = a.out;
  const GridReport g = RunGrid(cfg, a.out);
  std::fputs(FormatGridSummary(g).c_str(), stdout);
  return 0;
}

int RunDimSearch(const Args &a) {
  if (a.hmin < 1 || a.hmax < a.hmin)
    Fail(ErrorCode::kInvalidArgument, "need 1 <= hmin <= hmax");
  const ExperimentConfig cfg = ReadExperimentConfig(a.config);
  std::vector<int> dims;
  for (int h = a.hmin; h <= a.hmax; ++h) dims.push_back(h);
  const DimSearchReport r = DimSearch(cfg, dims, a.epochs);
  if (fs::path(a.out).extension() == ".csv")
    WriteDimSearchCsv(r, a.out);
  else
    WriteTextFile(DimSearchToJson(r).dump(2) + "\n", a.out);
  for (const auto &e : r.entries)
    std::printf("H=%-3d best epoch %-4d V-measure %.3f\n", e.hidden_dim, e.best_epoch + 1,
                e.hcv.v_measure);
  return 0;
}

int RunPlot(const Args &a) {
  if (a.svg.empty() && a.csv.empty())
    Fail(ErrorCode::kInvalidArgument, "plot needs --svg and/or --csv");
  ScatterOptions opts;
  opts.classes = a.classes;
  opts.view = {a.azimuth, a.elevation};
  opts.svg_path = a.svg;
  opts.csv_path = a.csv;
  const size_t n = ExportScatter(ReadEmbeddingsCsv(a.embeddings), opts);
  std::printf("plotted %zu points\n", n);
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Phonetic category learning toolkit"};
  app.require_subcommand(1);
  int verbosity = 1;
  app.add_option("-v,--verbose", verbosity, "0 = warnings only, 1 = progress, 2 = detail");
  Args a;
  auto seed_opt = [&](CLI::App *c) {
    c->add_option("--seed", a.seed, "master seed")->each([&](const std::string &) {
      a.seed_given = true;
    });
  };

  auto *synth = app.add_subcommand("synth", "render a synthetic corpus");
  synth->add_option("--spec", a.spec)->required()->check(CLI::ExistingFile);
  synth->add_option("--out", a.out)->required();
  seed_opt(synth);

  auto *extract = app.add_subcommand("extract", "cache MFCC features for a manifest");
  extract->add_option("--manifest", a.manifest)->required();
  extract->add_option("--features", a.features)->required();
  extract->add_option("--cache", a.cache)->required();

  auto *train = app.add_subcommand("train", "train the autoencoder");
  train->add_option("--manifest", a.manifest)->required();
  train->add_option("--cache", a.cache)->required();
  train->add_option("--model", a.model)->required();
  train->add_option("--train", a.train)->required();
  train->add_option("--out", a.out)->required();
  seed_opt(train);

  auto *encode = app.add_subcommand("encode", "write hidden vectors of labeled tokens");
  encode->add_option("--ckpt", a.ckpt)->required();
  encode->add_option("--manifest", a.manifest)->required();
  encode->add_option("--out", a.out)->required();

  auto *eval = app.add_subcommand("eval", "clustering, ABX and contrast metrics");
  eval->add_option("--ckpt", a.ckpt)->required();
  eval->add_option("--manifest", a.manifest)->required();
  eval->add_option("--inventory", a.inventory)->required();
  eval->add_option("--out", a.out)->required();
  seed_opt(eval);

  auto *grid = app.add_subcommand("grid", "train on two languages, evaluate all four cells");
  grid->add_option("--config", a.config)->required();
  grid->add_option("--out", a.out)->required();

  auto *dims = app.add_subcommand("dimsearch", "V-measure as a function of hidden size");
  dims->add_option("--config", a.config)->required();
  dims->add_option("--hmin", a.hmin)->capture_default_str();
  dims->add_option("--hmax", a.hmax)->capture_default_str();
  dims->add_option("--epochs", a.epochs)->capture_default_str();
  dims->add_option("--out", a.out)->required();

  auto *plot = app.add_subcommand("plot", "3-D scatter export");
  plot->add_option("--embeddings", a.embeddings)->required();
  plot->add_option("--classes", a.classes)->delimiter(',');
  plot->add_option("--azimuth", a.azimuth)->capture_default_str();
  plot->add_option("--elevation", a.elevation)->capture_default_str();
  plot->add_option("--svg", a.svg);
  plot->add_option("--csv", a.csv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    std::fprintf(stderr, "error: invalid_argument: %s\n", e.what());
    return 2;
  }
  SetVerbosity(verbosity);

  try {
    if (*synth) return RunSynth(a);
    if (*extract) return RunExtract(a);
    if (*train) return RunTrain(a);
    if (*encode) return RunEncode(a);
    if (*eval) return RunEval(a);
    if (*grid) return RunGridCommand(a);
    if (*dims) return RunDimSearch(a);
    if (*plot) return RunPlot(a);
  } catch (const Error &e) {
    std::fprintf(stderr, "error: %s: %s\n", std::string(ErrorCodeName(e.code())).c_str(),
                 e.what());
    return 1;
  } catch (const std::exception &e) {
    std::fprintf(stderr, "error: internal: %s\n", e.what());
    return 1;
  }
  return 1;
}
