// src/pipeline/experiment-config.cc

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

#include "pipeline/experiment-config.h"

#include <filesystem>
#include <fstream>

#include "base/error.h"

namespace phonacq {

namespace fs = std::filesystem;

void MetricConfig::Check() const {
  if (kmeans_k < 1) Fail(ErrorCode::kInvalidArgument, "kmeans_k must be positive");
  if (kmeans_max_iterations < 1)
    Fail(ErrorCode::kInvalidArgument, "kmeans_max_iterations must be positive");
  if (trim_fraction < 0.0 || trim_fraction >= 0.5)
    Fail(ErrorCode::kInvalidArgument, "trim_fraction must be in [0, 0.5)");
  if (hit_rate_trials < 1 || hit_rate_samples < 2)
    Fail(ErrorCode::kInvalidArgument, "hit rate needs at least one trial and two samples");
  if (!(alpha > 0.0 && alpha < 1.0)) Fail(ErrorCode::kInvalidArgument, "alpha must be in (0, 1)");
}

MetricConfig MetricConfigFromJson(const nlohmann::json &j) {
  MetricConfig c;
  c.kmeans_k = j.value("kmeans_k", c.kmeans_k);
  c.kmeans_max_iterations = j.value("kmeans_max_iterations", c.kmeans_max_iterations);
  c.trim_fraction = j.value("trim_fraction", c.trim_fraction);
  c.max_tokens_per_phone = j.value("max_tokens_per_phone", c.max_tokens_per_phone);
  c.max_tokens_per_class = j.value("max_tokens_per_class", c.max_tokens_per_class);
  c.hit_rate_trials = j.value("hit_rate_trials", c.hit_rate_trials);
  c.hit_rate_samples = j.value("hit_rate_samples", c.hit_rate_samples);
  c.alpha = j.value("alpha", c.alpha);
  c.contrast_features = j.value("contrast_features", c.contrast_features);
  c.Check();
  return c;
}

std::string ExperimentConfig::CacheDir() const {
  return cache_dir.empty() ? (fs::path(output_dir) / "cache").string() : cache_dir;
}

std::string ExperimentConfig::LanguageCacheDir(const std::string &tag) const {
  return (fs::path(CacheDir()) / tag).string();
}

void ExperimentConfig::Check() const {
  if (languages.empty()) Fail(ErrorCode::kInvalidArgument, "experiment has no languages");
  for (const auto &l : languages) {
    for (const std::string *p : {&l.manifest, &l.EvalManifest(), &l.inventory})
      if (!fs::exists(*p))
        Fail(ErrorCode::kMissingFile, "language " + l.tag + ": missing " + *p);
  }
  metrics.Check();
}

ExperimentConfig ReadExperimentConfig(const std::string &path) {
  std::ifstream is(path);
  if (!is) Fail(ErrorCode::kMissingFile, "cannot open " + path);
  const fs::path base = fs::path(path).parent_path();
  auto resolve = [&](const std::string &p) -> std::string {
    if (p.empty() || fs::path(p).is_absolute()) return p;
    return (base / p).lexically_normal().string();
  };
  ExperimentConfig c;
  try {
    const auto j = nlohmann::json::parse(is);
    for (const auto &jl : j.at("languages")) {
      LanguageConfig l;
      l.tag = jl.at("tag").get<std::string>();
      l.manifest = resolve(jl.at("manifest").get<std::string>());
      l.eval_manifest = resolve(jl.value("eval_manifest", std::string()));
      l.inventory = resolve(jl.at("inventory").get<std::string>());
      c.languages.push_back(std::move(l));
    }
    const nlohmann::json empty = nlohmann::json::object();
    c.features = FeatureConfigFromJson(j.value("features", empty));
    c.model = ModelConfigFromJson(j.value("model", empty));
    c.train = TrainConfigFromJson(j.value("train", empty));
    c.metrics = MetricConfigFromJson(j.value("metrics", empty));
    c.seed = j.value("seed", c.seed);
    c.output_dir = resolve(j.value("output_dir", std::string()));
    c.cache_dir = resolve(j.value("cache_dir", std::string()));
    c.train_segments = j.value("train_segments", c.train_segments);
  } catch (const nlohmann::json::exception &e) {
    Fail(ErrorCode::kParse, path + ": " + e.what());
  }
  return c;
}

}  // namespace phonacq
