// src/pipeline/scatter.h

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

#ifndef PHONACQ_PIPELINE_SCATTER_H_
#define PHONACQ_PIPELINE_SCATTER_H_

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "metrics/embedding.h"

namespace phonacq {

struct ScatterView {
  double azimuth_deg = 0.0;
  double elevation_deg = 0.0;
};

/// Orthographic projection: rotate about the y axis by the azimuth
/// (x' = x cos a - z sin a), then about the x axis by the elevation, and
/// drop the depth coordinate.
Eigen::Vector2d ProjectPoint(const Eigen::Vector3d &p, const ScatterView &view);

struct ScatterOptions {
  std::vector<std::string> classes;  // empty: every label
  ScatterView view;
  size_t max_per_class = 3000;
  uint64_t seed = 0;
  std::string csv_path;  // empty: skipped
  std::string svg_path;  // empty: skipped; needs 3-D embeddings
};

/// Keeps the selected classes, subsamples each to max_per_class, and writes
/// a CSV (x,y,z,label for 3-D, d0..,label otherwise) and an SVG scatter with
/// one colour per class and a legend.  Returns the number of points kept.
/// Throws kDimensionMismatch when an SVG is requested for non-3-D input.
size_t ExportScatter(const EmbeddingSet &embeddings, const ScatterOptions &opts);

}  // namespace phonacq

#endif  // PHONACQ_PIPELINE_SCATTER_H_
