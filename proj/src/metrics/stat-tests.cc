// src/metrics/stat-tests.cc

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

#include "metrics/stat-tests.h"

#include <boost/math/distributions/fisher_f.hpp>
#include <boost/math/distributions/students_t.hpp>
#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

#include "base/error.h"
#include "base/random.h"

namespace phonacq {

namespace {

constexpr double kRidge = 1e-6;

void MeanVar(std::span<const double> x, double *mean, double *var) {
  double s = 0.0;
  for (double v : x) s += v;
  *mean = s / static_cast<double>(x.size());
  double ss = 0.0;
  for (double v : x) ss += (v - *mean) * (v - *mean);
  *var = ss / static_cast<double>(x.size() - 1);
}

}  // namespace

HotellingResult HotellingT2(const Eigen::MatrixXd &a, const Eigen::MatrixXd &b) {
  HotellingResult r;
  r.n1 = static_cast<int>(a.rows());
  r.n2 = static_cast<int>(b.rows());
  r.dims = static_cast<int>(a.cols());
  const int p = r.dims;
  if (a.cols() != b.cols()) Fail(ErrorCode::kDimensionMismatch, "Hotelling: dimension mismatch");
  const int df2 = r.n1 + r.n2 - p - 1;
  if (r.n1 < 1 || r.n2 < 1 || p < 1 || df2 < 1)
    Fail(ErrorCode::kInsufficientData,
         "Hotelling: need n1 + n2 - p - 1 >= 1 (n1=" + std::to_string(r.n1) +
             ", n2=" + std::to_string(r.n2) + ", p=" + std::to_string(p) + ")");

  const Eigen::RowVectorXd m1 = a.colwise().mean(), m2 = b.colwise().mean();
  const Eigen::MatrixXd c1 = a.rowwise() - m1, c2 = b.rowwise() - m2;
  Eigen::MatrixXd pooled =
      (c1.transpose() * c1 + c2.transpose() * c2) / static_cast<double>(r.n1 + r.n2 - 2);
  const Eigen::VectorXd diff = (m1 - m2).transpose();
  if (diff.isZero(0.0)) return r;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(pooled, Eigen::EigenvaluesOnly);
  const double lo = eig.eigenvalues().minCoeff(), hi = eig.eigenvalues().maxCoeff();
  if (!(lo > 1e-12 * std::max(hi, 1e-300))) {
    pooled.diagonal().array() += kRidge;
    r.ridge_applied = true;
  }
  const Eigen::VectorXd sol = pooled.ldlt().solve(diff);
  const double scale = static_cast<double>(r.n1) * r.n2 / (r.n1 + r.n2);
  r.t2 = std::max(0.0, scale * diff.dot(sol));
  r.f_stat = r.t2 * df2 / (static_cast<double>(p) * (r.n1 + r.n2 - 2));
  if (r.t2 == 0.0) return r;
  boost::math::fisher_f dist(p, df2);
  r.p_value = std::clamp(boost::math::cdf(boost::math::complement(dist, r.f_stat)), 0.0, 1.0);
  return r;
}

double HitRate(const Eigen::MatrixXd &a, const Eigen::MatrixXd &b, const HitRateConfig &cfg) {
  const Eigen::Index k = cfg.samples_per_group;
  if (cfg.trials < 1 || k < 1) Fail(ErrorCode::kInvalidArgument, "hit rate: bad config");
  if (a.rows() < k || b.rows() < k)
    Fail(ErrorCode::kInsufficientData,
         "hit rate: classes of " + std::to_string(a.rows()) + " and " +
             std::to_string(b.rows()) + " points, need " + std::to_string(k) + " each");
  Eigen::MatrixXd sa(k, a.cols()), sb(k, b.cols());
  int hits = 0;
  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng(DeriveSeed(cfg.seed, static_cast<uint64_t>(t)));
    const auto ia = rng.SampleWithoutReplacement(static_cast<size_t>(a.rows()), static_cast<size_t>(k));
    const auto ib = rng.SampleWithoutReplacement(static_cast<size_t>(b.rows()), static_cast<size_t>(k));
    for (Eigen::Index i = 0; i < k; ++i) {
      sa.row(i) = a.row(static_cast<Eigen::Index>(ia[static_cast<size_t>(i)]));
      sb.row(i) = b.row(static_cast<Eigen::Index>(ib[static_cast<size_t>(i)]));
    }
    if (HotellingT2(sa, sb).p_value < cfg.alpha) ++hits;
  }
  return static_cast<double>(hits) / cfg.trials;
}

WelchResult WelchTTest(std::span<const double> x, std::span<const double> y) {
  if (x.size() < 2 || y.size() < 2)
    Fail(ErrorCode::kInsufficientData, "Welch test needs two values per sample");
  double mx, vx, my, vy;
  MeanVar(x, &mx, &vx);
  MeanVar(y, &my, &vy);
  const double sx = vx / x.size(), sy = vy / y.size();
  if (!(sx + sy > 0.0)) Fail(ErrorCode::kDegenerate, "Welch test: both samples are constant");
  WelchResult r;
  r.t = (mx - my) / std::sqrt(sx + sy);
  r.df = (sx + sy) * (sx + sy) /
         (sx * sx / (x.size() - 1.0) + sy * sy / (y.size() - 1.0));
  if (r.t == 0.0) return r;
  boost::math::students_t dist(r.df);
  r.p_value = std::min(1.0, 2.0 * boost::math::cdf(boost::math::complement(dist, std::fabs(r.t))));
  return r;
}

double PooledTStatistic(std::span<const double> x, std::span<const double> y) {
  double mx, vx, my, vy;
  MeanVar(x, &mx, &vx);
  MeanVar(y, &my, &vy);
  const double n1 = static_cast<double>(x.size()), n2 = static_cast<double>(y.size());
  const double sp = ((n1 - 1) * vx + (n2 - 1) * vy) / (n1 + n2 - 2);
  return (mx - my) / std::sqrt(sp * (1.0 / n1 + 1.0 / n2));
}

}  // namespace phonacq
