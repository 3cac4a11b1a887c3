// src/metrics/stat-tests.h

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

#ifndef PHONACQ_METRICS_STAT_TESTS_H_
#define PHONACQ_METRICS_STAT_TESTS_H_

#include <cstdint>
#include <span>

#include <Eigen/Core>

namespace phonacq {

struct HotellingResult {
  double t2 = 0.0;
  double f_stat = 0.0;
  double p_value = 1.0;
  int dims = 0;
  int n1 = 0;
  int n2 = 0;
  bool ridge_applied = false;  // pooled covariance was near-singular
};

/// Two-sample Hotelling T^2 with pooled covariance.  Points are rows.
/// F = T^2 (n1 + n2 - p - 1) / (p (n1 + n2 - 2)) against F(p, n1 + n2 - p - 1).
/// A 1e-6 ridge is added when the pooled covariance is not safely positive
/// definite.  Throws kInsufficientData when n1 + n2 - p - 1 < 1.
HotellingResult HotellingT2(const Eigen::MatrixXd &a, const Eigen::MatrixXd &b);

struct HitRateConfig {
  int trials = 500;
  int samples_per_group = 25;
  double alpha = 0.05;
  uint64_t seed = 0;
};

/// Fraction of trials in which HotellingT2 on `samples_per_group` points
/// drawn without replacement from each class gives p < alpha.
double HitRate(const Eigen::MatrixXd &a, const Eigen::MatrixXd &b, const HitRateConfig &cfg);

struct WelchResult {
  double t = 0.0;
  double df = 0.0;
  double p_value = 1.0;  // two-sided
};

/// Welch's unequal-variance t test.  Each sample needs two values and at
/// least one must have positive variance (kDegenerate otherwise).
WelchResult WelchTTest(std::span<const double> x, std::span<const double> y);

/// Pooled-variance Student t statistic (used as a cross-check).
double PooledTStatistic(std::span<const double> x, std::span<const double> y);

}  // namespace phonacq

#endif  // PHONACQ_METRICS_STAT_TESTS_H_
