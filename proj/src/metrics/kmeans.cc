// src/metrics/kmeans.cc

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

#include "metrics/kmeans.h"

#include <limits>

#include "base/error.h"
#include "base/random.h"

namespace phonacq {

namespace {

Eigen::MatrixXd SeedPlusPlus(const Eigen::MatrixXd &x, int k, Rng *rng) {
  const Eigen::Index n = x.rows();
  Eigen::MatrixXd c(k, x.cols());
  std::vector<bool> chosen(static_cast<size_t>(n), false);
  Eigen::Index first = static_cast<Eigen::Index>(rng->UniformInt(static_cast<uint64_t>(n)));
  c.row(0) = x.row(first);
  chosen[static_cast<size_t>(first)] = true;
  Eigen::VectorXd d2 = (x.rowwise() - c.row(0)).rowwise().squaredNorm();
  for (int j = 1; j < k; ++j) {
    const double total = d2.sum();
    Eigen::Index pick = -1;
    if (total > 0.0) {
      double u = rng->Uniform() * total, acc = 0.0;
      for (Eigen::Index i = 0; i < n; ++i) {
        acc += d2[i];
        if (d2[i] > 0.0 && acc > u) {
          pick = i;
          break;
        }
      }
      if (pick < 0)  // rounding at the tail
        for (Eigen::Index i = n - 1; i >= 0 && pick < 0; --i)
          if (d2[i] > 0.0) pick = i;
    } else {
      // Every remaining point coincides with a centre: take an unused one.
      std::vector<Eigen::Index> free;
      for (Eigen::Index i = 0; i < n; ++i)
        if (!chosen[static_cast<size_t>(i)]) free.push_back(i);
      pick = free[rng->UniformInt(free.size())];
    }
    c.row(j) = x.row(pick);
    chosen[static_cast<size_t>(pick)] = true;
    d2 = d2.cwiseMin((x.rowwise() - c.row(j)).rowwise().squaredNorm());
  }
  return c;
}

// Returns the inertia; fills assignments and per-point squared distances.
double Assign(const Eigen::MatrixXd &x, const Eigen::MatrixXd &c, std::vector<int> *assign,
              Eigen::VectorXd *dist, bool *changed) {
  double inertia = 0.0;
  *changed = false;
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    int arg = 0;
    for (Eigen::Index j = 0; j < c.rows(); ++j) {
      const double d = (x.row(i) - c.row(j)).squaredNorm();
      if (d < best) {
        best = d;
        arg = static_cast<int>(j);
      }
    }
    auto &slot = (*assign)[static_cast<size_t>(i)];
    if (slot != arg) *changed = true;
    slot = arg;
    (*dist)[i] = best;
    inertia += best;
  }
  return inertia;
}

}  // namespace

KMeansResult KMeans(const Eigen::MatrixXd &x, const KMeansOptions &opts) {
  const Eigen::Index n = x.rows();
  if (opts.k < 1) Fail(ErrorCode::kInvalidArgument, "k must be positive");
  if (n < opts.k)
    Fail(ErrorCode::kInsufficientData, "k-means: " + std::to_string(n) +
                                           " points for " + std::to_string(opts.k) +
                                           " clusters");
  Rng rng(opts.seed);
  KMeansResult res;
  res.centroids = SeedPlusPlus(x, opts.k, &rng);
  res.assignments.assign(static_cast<size_t>(n), -1);
  Eigen::VectorXd dist(n);
  bool changed = false;
  res.inertia = Assign(x, res.centroids, &res.assignments, &dist, &changed);
  res.inertia_history.push_back(res.inertia);

  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(opts.k, x.cols());
    std::vector<Eigen::Index> counts(static_cast<size_t>(opts.k), 0);
    for (Eigen::Index i = 0; i < n; ++i) {
      const int a = res.assignments[static_cast<size_t>(i)];
      sums.row(a) += x.row(i);
      ++counts[static_cast<size_t>(a)];
    }
    for (int j = 0; j < opts.k; ++j) {
      if (counts[static_cast<size_t>(j)] > 0) {
        res.centroids.row(j) = sums.row(j) / static_cast<double>(counts[static_cast<size_t>(j)]);
      } else {
        Eigen::Index far;
        dist.maxCoeff(&far);
        res.centroids.row(j) = x.row(far);
        dist[far] = 0.0;
      }
    }
    res.inertia = Assign(x, res.centroids, &res.assignments, &dist, &changed);
    res.inertia_history.push_back(res.inertia);
    res.iterations = iter + 1;
    if (!changed) break;
  }
  return res;
}

}  // namespace phonacq
