// src/pipeline/condition.cc

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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

#include "base/error.h"
#include "base/log.h"
#include "base/random.h"
#include "metrics/kmeans.h"
#include "metrics/normalize.h"
#include "metrics/silhouette.h"
#include "metrics/stat-tests.h"
#include "pipeline/corpus-features.h"

namespace phonacq {

namespace fs = std::filesystem;

EncodedTokens EncodeTokens(const Checkpoint &ckpt, const std::vector<ManifestEntry> &entries,
                           const std::string &cache_dir, const FeatureSystem *inventory) {
  EncodedTokens out;
  std::vector<Segment> segments;
  for (const auto &e : entries) {
    RecordingFeatures rec{e.recording_id, LoadFeatures(e, ckpt.features, cache_dir)};
    EvalSegmentResult r = ExtractEvalSegments(rec, ParseAlignment(e.alignment_path));
    out.skipped_tokens += static_cast<size_t>(r.skipped_tokens);
    for (auto &s : r.segments) {
      if (inventory && !inventory->Find(*s.label)) {
        ++out.unknown_labels[*s.label];
        continue;
      }
      segments.push_back(std::move(s));
    }
  }
  ckpt.normalizer.Apply(&segments);
  out.embeddings = Encode(ckpt.params, segments);
  if (inventory)
    for (auto &e : out.embeddings) e.status = inventory->Find(e.label)->status;
  for (const auto &[label, n] : out.unknown_labels)
    PHONACQ_WARN << n << " tokens of '" << label << "' are not in the inventory; excluded";
  return out;
}

namespace {

Eigen::MatrixXd Subsample(const EmbeddingSet &set, const std::set<std::string> &labels,
                          size_t cap, uint64_t seed) {
  std::vector<size_t> idx;
  for (size_t i = 0; i < set.size(); ++i)
    if (labels.count(set[i].label)) idx.push_back(i);
  if (cap > 0 && idx.size() > cap) {
    Rng rng(seed);
    auto keep = rng.SampleWithoutReplacement(idx.size(), cap);
    std::sort(keep.begin(), keep.end());
    std::vector<size_t> sub;
    for (size_t k : keep) sub.push_back(idx[k]);
    idx = std::move(sub);
  }
  const Eigen::Index d = set.empty() ? 0 : set[0].vector.size();
  Eigen::MatrixXd m(static_cast<Eigen::Index>(idx.size()), d);
  for (size_t r = 0; r < idx.size(); ++r)
    m.row(static_cast<Eigen::Index>(r)) = set[idx[r]].vector.transpose();
  return m;
}

}  // namespace

ConditionReport EvaluateCondition(const std::string &tag, const EmbeddingSet &embeddings,
                                  const FeatureSystem &inventory, const MetricConfig &cfg,
                                  uint64_t seed) {
  if (embeddings.empty()) Fail(ErrorCode::kEmptyInput, tag + ": no embeddings to evaluate");
  cfg.Check();
  ConditionReport r;
  r.tag = tag;
  r.language = inventory.language();
  r.n_embeddings = embeddings.size();

  // Clustering.
  const std::vector<std::string> labels = Labels(embeddings);
  r.k = std::min<int>(cfg.kmeans_k, static_cast<int>(embeddings.size()));
  r.n_clustered = embeddings.size();
  KMeansOptions km;
  km.k = r.k;
  km.max_iterations = cfg.kmeans_max_iterations;
  km.seed = DeriveSeed(seed, "kmeans");
  const KMeansResult clusters = KMeans(ToMatrix(embeddings), km);
  r.hcv = Hcv(labels, clusters.assignments);
  r.baseline = RandomBaselineHcv(labels, r.k, DeriveSeed(seed, "baseline"));

  // ABX.
  AbxOptions abx;
  abx.trim_fraction = cfg.trim_fraction;
  abx.max_tokens_per_phone = cfg.max_tokens_per_phone;
  abx.seed = DeriveSeed(seed, "abx");
  r.abx = AbxAllPairs(embeddings, EnumerateAbxPairs(inventory), abx);

  // Contrasts.
  const EmbeddingSet trimmed = TrimOutliers(embeddings, cfg.trim_fraction);
  r.n_contrast_embeddings = trimmed.size();
  EmbeddingSet scaled;
  bool degenerate = false;
  try {
    scaled = MinmaxNormalize(trimmed);
  } catch (const Error &e) {
    if (e.code() != ErrorCode::kDegenerate && e.code() != ErrorCode::kEmptyInput) throw;
    PHONACQ_WARN << tag << ": " << e.what() << "; contrasts not scored";
    degenerate = true;
  }
  std::vector<std::string> features = cfg.contrast_features;
  if (features.empty()) features = inventory.features();
  for (const auto &feature : features) {
    for (const ContrastPair &cp : MinimalContrastPairs(inventory, feature)) {
      ContrastResult c;
      c.feature = feature;
      c.category = cp.category;
      c.plus = cp.plus;
      c.minus = cp.minus;
      const std::string key = feature + ":" + CategoryName(cp.category);
      if (!degenerate) {
        const Eigen::MatrixXd a =
            Subsample(scaled, {cp.plus.begin(), cp.plus.end()}, cfg.max_tokens_per_class,
                      DeriveSeed(seed, "contrast+:" + key));
        const Eigen::MatrixXd b =
            Subsample(scaled, {cp.minus.begin(), cp.minus.end()}, cfg.max_tokens_per_class,
                      DeriveSeed(seed, "contrast-:" + key));
        c.n_plus = static_cast<size_t>(a.rows());
        c.n_minus = static_cast<size_t>(b.rows());
        const auto need = static_cast<Eigen::Index>(cfg.hit_rate_samples);
        if (a.rows() >= need && b.rows() >= need) {
          c.evaluated = true;
          c.silhouette = SilhouettePair(a, b);
          HitRateConfig hr;
          hr.trials = cfg.hit_rate_trials;
          hr.samples_per_group = cfg.hit_rate_samples;
          hr.alpha = cfg.alpha;
          hr.seed = DeriveSeed(seed, "hit-rate:" + key);
          c.hit_rate = HitRate(a, b, hr);
        }
      }
      r.contrasts.push_back(std::move(c));
    }
  }
  return r;
}

ConditionReport RunCondition(const std::string &tag, const Checkpoint &ckpt,
                             const DatasetManifest &eval_manifest,
                             const FeatureSystem &inventory, const MetricConfig &cfg,
                             const std::string &cache_dir, uint64_t seed,
                             EmbeddingSet *embeddings_out) {
  EncodedTokens enc = EncodeTokens(ckpt, EvaluationEntries(eval_manifest), cache_dir, &inventory);
  if (enc.embeddings.empty())
    Fail(ErrorCode::kEmptyInput, tag + ": evaluation set has no labeled tokens");
  ConditionReport r = EvaluateCondition(tag, enc.embeddings, inventory, cfg, seed);
  r.unknown_labels = enc.unknown_labels;
  if (embeddings_out) *embeddings_out = std::move(enc.embeddings);
  return r;
}

namespace {

nlohmann::ordered_json HcvJson(const HcvScores &s) {
  nlohmann::ordered_json j;
  j["homogeneity"] = s.homogeneity;
  j["completeness"] = s.completeness;
  j["v_measure"] = s.v_measure;
  return j;
}

std::string Join(const std::vector<std::string> &v, const char *sep) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

}  // namespace

nlohmann::ordered_json ConditionReportToJson(const ConditionReport &r) {
  nlohmann::ordered_json j;
  j["tag"] = r.tag;
  j["language"] = r.language;
  j["n_embeddings"] = r.n_embeddings;
  j["unknown_labels"] = r.unknown_labels;
  nlohmann::ordered_json cl;
  cl["k"] = r.k;
  cl["n_embeddings"] = r.n_clustered;
  cl["model"] = HcvJson(r.hcv);
  cl["random_baseline"] = HcvJson(r.baseline);
  j["clustering"] = cl;
  nlohmann::ordered_json abx;
  abx["n_embeddings"] = r.abx.n_embeddings;
  abx["n_pairs"] = r.abx.pairs.size();
  abx["skipped_pairs"] = r.abx.skipped_pairs;
  abx["mean"] = r.abx.mean;
  abx["sd"] = r.abx.sd;
  j["abx"] = abx;
  nlohmann::ordered_json cs = nlohmann::ordered_json::array();
  for (const auto &c : r.contrasts) {
    nlohmann::ordered_json jc;
    jc["feature"] = c.feature;
    jc["category"] = CategoryName(c.category);
    jc["plus"] = c.plus;
    jc["minus"] = c.minus;
    jc["n_plus"] = c.n_plus;
    jc["n_minus"] = c.n_minus;
    jc["evaluated"] = c.evaluated;
    if (c.evaluated) {
      jc["silhouette"] = c.silhouette;
      jc["hit_rate"] = c.hit_rate;
    }
    cs.push_back(jc);
  }
  nlohmann::ordered_json con;
  con["n_embeddings"] = r.n_contrast_embeddings;
  con["pairs"] = cs;
  j["contrasts"] = con;
  return j;
}

void WriteContrastCsv(const ConditionReport &r, const std::string &path) {
  std::FILE *f = std::fopen(path.c_str(), "w");
  if (!f) Fail(ErrorCode::kUnwritable, "cannot write " + path);
  std::fprintf(f, "feature,category,plus,minus,n_plus,n_minus,evaluated,silhouette,hit_rate\n");
  for (const auto &c : r.contrasts) {
    std::fprintf(f, "%s,%s,%s,%s,%zu,%zu,%d,", c.feature.c_str(), CategoryName(c.category),
                 Join(c.plus, " ").c_str(), Join(c.minus, " ").c_str(), c.n_plus, c.n_minus,
                 c.evaluated ? 1 : 0);
    if (c.evaluated) std::fprintf(f, "%.17g,%.17g\n", c.silhouette, c.hit_rate);
    else std::fprintf(f, ",\n");
  }
  if (std::fclose(f) != 0) Fail(ErrorCode::kUnwritable, "write failed: " + path);
}

std::string FormatConditionSummary(const ConditionReport &r) {
  std::string s;
  char buf[512];
  std::snprintf(buf, sizeof(buf), "condition %s (%s), %zu embeddings\n", r.tag.c_str(),
                r.language.c_str(), r.n_embeddings);
  s += buf;
  std::snprintf(buf, sizeof(buf),
                "  k-means k=%d      homogeneity %.3f  completeness %.3f  v-measure %.3f\n",
                r.k, r.hcv.homogeneity, r.hcv.completeness, r.hcv.v_measure);
  s += buf;
  std::snprintf(buf, sizeof(buf),
                "  random baseline   homogeneity %.3f  completeness %.3f  v-measure %.3f\n",
                r.baseline.homogeneity, r.baseline.completeness, r.baseline.v_measure);
  s += buf;
  std::snprintf(buf, sizeof(buf), "  ABX error %.3f (sd %.3f) over %zu pairs, %zu skipped, n=%zu\n",
                r.abx.mean, r.abx.sd, r.abx.pairs.size(), r.abx.skipped_pairs,
                r.abx.n_embeddings);
  s += buf;
  std::snprintf(buf, sizeof(buf), "  contrasts (n=%zu)\n", r.n_contrast_embeddings);
  s += buf;
  for (const auto &c : r.contrasts) {
    if (c.evaluated)
      std::snprintf(buf, sizeof(buf), "    %-16s %-9s silhouette %.3f  hit rate %.3f  (%zu/%zu)\n",
                    c.feature.c_str(), CategoryName(c.category), c.silhouette, c.hit_rate,
                    c.n_plus, c.n_minus);
    else
      std::snprintf(buf, sizeof(buf), "    %-16s %-9s not scored (%zu/%zu tokens)\n",
                    c.feature.c_str(), CategoryName(c.category), c.n_plus, c.n_minus);
    s += buf;
  }
  for (const auto &[label, n] : r.unknown_labels) {
    std::snprintf(buf, sizeof(buf), "  excluded %zu tokens of unknown label '%s'\n", n,
                  label.c_str());
    s += buf;
  }
  return s;
}

void EnsureDirectory(const std::string &dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) Fail(ErrorCode::kUnwritable, "cannot create " + dir + ": " + ec.message());
}

void WriteTextFile(const std::string &text, const std::string &path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) Fail(ErrorCode::kUnwritable, "cannot write " + path);
  os << text;
  if (!os) Fail(ErrorCode::kUnwritable, "write failed: " + path);
}

void WriteConditionOutputs(const ConditionReport &r, const EmbeddingSet *embeddings,
                           const std::string &dir) {
  EnsureDirectory(dir);
  const fs::path d(dir);
  WriteTextFile(ConditionReportToJson(r).dump(2) + "\n", (d / "report.json").string());
  WriteAbxCsv(r.abx, (d / "abx.csv").string());
  WriteContrastCsv(r, (d / "contrasts.csv").string());
  WriteTextFile(FormatConditionSummary(r), (d / "summary.txt").string());
  if (embeddings) WriteEmbeddingsCsv(*embeddings, (d / "embeddings.csv").string());
}

}  // namespace phonacq
