// src/pipeline/scatter.cc

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

#include "pipeline/scatter.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>

#include "base/error.h"
#include "base/random.h"

namespace phonacq {

Eigen::Vector2d ProjectPoint(const Eigen::Vector3d &p, const ScatterView &view) {
  const double a = view.azimuth_deg * std::numbers::pi / 180.0;
  const double e = view.elevation_deg * std::numbers::pi / 180.0;
  const double x1 = p.x() * std::cos(a) - p.z() * std::sin(a);
  const double z1 = p.x() * std::sin(a) + p.z() * std::cos(a);
  const double y2 = p.y() * std::cos(e) - z1 * std::sin(e);
  return {x1, y2};
}

namespace {

// Tableau 10.
const char *const kPalette[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
                                "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac"};

std::string XmlEscape(const std::string &s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

void WriteSvg(const EmbeddingSet &pts, const std::vector<std::string> &classes,
              const ScatterView &view, const std::string &path) {
  const double size = 600.0, margin = 40.0, legend_w = 140.0;
  std::vector<Eigen::Vector2d> proj;
  Eigen::Vector2d lo(0, 0), hi(1, 1);
  for (size_t i = 0; i < pts.size(); ++i) {
    proj.push_back(ProjectPoint(pts[i].vector.head<3>(), view));
    if (i == 0) lo = hi = proj.back();
    lo = lo.cwiseMin(proj.back());
    hi = hi.cwiseMax(proj.back());
  }
  const double span = std::max({hi.x() - lo.x(), hi.y() - lo.y(), 1e-12});
  const double scale = (size - 2 * margin) / span;
  std::map<std::string, size_t> colour;
  for (size_t i = 0; i < classes.size(); ++i) colour[classes[i]] = i % 10;

  std::FILE *f = std::fopen(path.c_str(), "w");
  if (!f) Fail(ErrorCode::kUnwritable, "cannot write " + path);
  std::fprintf(f,
               "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" "
               "viewBox=\"0 0 %.0f %.0f\">\n",
               size + legend_w, size, size + legend_w, size);
  std::fprintf(f, "<rect width=\"100%%\" height=\"100%%\" fill=\"white\"/>\n");
  std::fprintf(f, "<g fill-opacity=\"0.6\">\n");
  for (size_t i = 0; i < pts.size(); ++i) {
    const double x = margin + (proj[i].x() - lo.x()) * scale;
    const double y = size - margin - (proj[i].y() - lo.y()) * scale;
    std::fprintf(f, "<circle cx=\"%.3f\" cy=\"%.3f\" r=\"2\" fill=\"%s\"/>\n", x, y,
                 kPalette[colour[pts[i].label]]);
  }
  std::fprintf(f, "</g>\n<g font-family=\"sans-serif\" font-size=\"14\">\n");
  for (size_t i = 0; i < classes.size(); ++i) {
    const double y = margin + 22.0 * i;
    std::fprintf(f, "<circle cx=\"%.1f\" cy=\"%.1f\" r=\"6\" fill=\"%s\"/>\n", size + 10, y,
                 kPalette[i % 10]);
    std::fprintf(f, "<text x=\"%.1f\" y=\"%.1f\">%s</text>\n", size + 24, y + 5,
                 XmlEscape(classes[i]).c_str());
  }
  std::fprintf(f, "</g>\n</svg>\n");
  if (std::fclose(f) != 0) Fail(ErrorCode::kUnwritable, "write failed: " + path);
}

}  // namespace

size_t ExportScatter(const EmbeddingSet &embeddings, const ScatterOptions &opts) {
  const Eigen::Index d = embeddings.empty() ? 0 : embeddings[0].vector.size();
  if (!opts.svg_path.empty() && d != 3)
    Fail(ErrorCode::kDimensionMismatch,
         "scatter plots need 3-D embeddings, got " + std::to_string(d) + "-D");
  std::vector<std::string> classes = opts.classes;
  if (classes.empty()) {
    for (const auto &e : embeddings)
      if (std::find(classes.begin(), classes.end(), e.label) == classes.end())
        classes.push_back(e.label);
  }
  EmbeddingSet kept;
  for (const auto &cls : classes) {
    EmbeddingSet members = WithLabel(embeddings, cls);
    if (opts.max_per_class > 0 && members.size() > opts.max_per_class) {
      Rng rng(DeriveSeed(opts.seed, "scatter:" + cls));
      auto idx = rng.SampleWithoutReplacement(members.size(), opts.max_per_class);
      std::sort(idx.begin(), idx.end());
      EmbeddingSet sub;
      for (size_t i : idx) sub.push_back(members[i]);
      members = std::move(sub);
    }
    kept.insert(kept.end(), members.begin(), members.end());
  }

  if (!opts.csv_path.empty()) {
    std::FILE *f = std::fopen(opts.csv_path.c_str(), "w");
    if (!f) Fail(ErrorCode::kUnwritable, "cannot write " + opts.csv_path);
    if (d == 3) {
      std::fprintf(f, "x,y,z,label\n");
    } else {
      for (Eigen::Index i = 0; i < d; ++i) std::fprintf(f, "d%ld,", static_cast<long>(i));
      std::fprintf(f, "label\n");
    }
    for (const auto &e : kept) {
      for (Eigen::Index i = 0; i < d; ++i) std::fprintf(f, "%.17g,", e.vector(i));
      std::fprintf(f, "%s\n", e.label.c_str());
    }
    if (std::fclose(f) != 0) Fail(ErrorCode::kUnwritable, "write failed: " + opts.csv_path);
  }
  if (!opts.svg_path.empty()) WriteSvg(kept, classes, opts.view, opts.svg_path);
  return kept.size();
}

}  // namespace phonacq
