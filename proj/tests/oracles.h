// tests/oracles.h

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

#ifndef PHONACQ_TESTS_ORACLES_H_
#define PHONACQ_TESTS_ORACLES_H_

// Brute-force reference implementations used by unit and acceptance tests.
// They share no code with the library versions.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <vector>

#include "base/random.h"
#include "nnet/autoencoder.h"

namespace phonacq {
namespace oracle {

inline double Dist(const Eigen::MatrixXd &p, Eigen::Index i, const Eigen::MatrixXd &q,
                   Eigen::Index j) {
  double s = 0.0;
  for (Eigen::Index d = 0; d < p.cols(); ++d) s += (p(i, d) - q(j, d)) * (p(i, d) - q(j, d));
  return std::sqrt(s);
}

// Enumerates every (a, x, b) triple with a != x drawn from A.
inline double AbxDirected(const Eigen::MatrixXd &A, const Eigen::MatrixXd &B) {
  double score = 0.0;
  long n = 0;
  for (Eigen::Index x = 0; x < A.rows(); ++x)
    for (Eigen::Index a = 0; a < A.rows(); ++a) {
      if (a == x) continue;
      for (Eigen::Index b = 0; b < B.rows(); ++b) {
        const double dxa = Dist(A, x, A, a), dxb = Dist(A, x, B, b);
        score += dxb < dxa ? 1.0 : (dxb == dxa ? 0.5 : 0.0);
        ++n;
      }
    }
  return score / n;
}

inline double Abx(const Eigen::MatrixXd &A, const Eigen::MatrixXd &B) {
  return 0.5 * (AbxDirected(A, B) + AbxDirected(B, A));
}

struct Hcv {
  double h, c, v;
};

// Conditional entropies from explicit joint probabilities.
inline Hcv HcvOracle(const std::vector<int> &cls, const std::vector<int> &clu) {
  const double n = static_cast<double>(cls.size());
  std::map<std::pair<int, int>, double> joint;
  std::map<int, double> pc, pk;
  for (size_t i = 0; i < cls.size(); ++i) {
    joint[{cls[i], clu[i]}] += 1.0 / n;
    pc[cls[i]] += 1.0 / n;
    pk[clu[i]] += 1.0 / n;
  }
  double hc = 0.0, hk = 0.0, hc_k = 0.0, hk_c = 0.0;
  for (auto &[c, p] : pc) hc -= p * std::log(p);
  for (auto &[k, p] : pk) hk -= p * std::log(p);
  for (auto &[ck, p] : joint) {
    hc_k -= p * std::log(p / pk[ck.second]);
    hk_c -= p * std::log(p / pc[ck.first]);
  }
  Hcv r;
  r.h = hc == 0.0 ? 1.0 : 1.0 - hc_k / hc;
  r.c = hk == 0.0 ? 1.0 : 1.0 - hk_c / hk;
  r.v = r.h + r.c > 0.0 ? 2.0 * r.h * r.c / (r.h + r.c) : 0.0;
  return r;
}

inline double SilhouettePoint(const Eigen::MatrixXd &own, Eigen::Index i,
                              const Eigen::MatrixXd &other) {
  if (own.rows() == 1) return 0.0;
  double a = 0.0, b = 0.0;
  for (Eigen::Index j = 0; j < own.rows(); ++j) a += Dist(own, i, own, j);
  for (Eigen::Index j = 0; j < other.rows(); ++j) b += Dist(own, i, other, j);
  a /= static_cast<double>(own.rows() - 1);
  b /= static_cast<double>(other.rows());
  const double m = std::max(a, b);
  return m == 0.0 ? 0.0 : (b - a) / m;
}

inline double Silhouette(const Eigen::MatrixXd &A, const Eigen::MatrixXd &B) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < A.rows(); ++i) s += SilhouettePoint(A, i, B);
  for (Eigen::Index i = 0; i < B.rows(); ++i) s += SilhouettePoint(B, i, A);
  return s / static_cast<double>(A.rows() + B.rows());
}

// Hotelling T^2 for two dimensions with a hand-written 2x2 inverse; the
// F(2, m) upper tail has the closed form (1 + 2f/m)^(-m/2).
struct Hotelling2d {
  double t2, f, p;
};

inline Hotelling2d Hotelling2dOracle(const Eigen::MatrixXd &A, const Eigen::MatrixXd &B) {
  const double n1 = static_cast<double>(A.rows()), n2 = static_cast<double>(B.rows());
  double m1[2] = {0, 0}, m2[2] = {0, 0};
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (int d = 0; d < 2; ++d) m1[d] += A(i, d) / n1;
  for (Eigen::Index i = 0; i < B.rows(); ++i)
    for (int d = 0; d < 2; ++d) m2[d] += B(i, d) / n2;
  double s[2][2] = {{0, 0}, {0, 0}};
  for (int u = 0; u < 2; ++u)
    for (int w = 0; w < 2; ++w) {
      for (Eigen::Index i = 0; i < A.rows(); ++i) s[u][w] += (A(i, u) - m1[u]) * (A(i, w) - m1[w]);
      for (Eigen::Index i = 0; i < B.rows(); ++i) s[u][w] += (B(i, u) - m2[u]) * (B(i, w) - m2[w]);
      s[u][w] /= n1 + n2 - 2;
    }
  const double det = s[0][0] * s[1][1] - s[0][1] * s[1][0];
  const double d0 = m1[0] - m2[0], d1 = m1[1] - m2[1];
  const double q = (d0 * (s[1][1] * d0 - s[0][1] * d1) + d1 * (-s[1][0] * d0 + s[0][0] * d1)) / det;
  Hotelling2d r;
  r.t2 = n1 * n2 / (n1 + n2) * q;
  const double m = n1 + n2 - 3;
  r.f = r.t2 * m / (2 * (n1 + n2 - 2));
  r.p = std::pow(1.0 + 2.0 * r.f / m, -m / 2.0);
  return r;
}

// Two-sample pooled-variance t statistic.
inline double PooledT(const std::vector<double> &x, const std::vector<double> &y) {
  auto mean = [](const std::vector<double> &v) {
    double s = 0;
    for (double a : v) s += a;
    return s / v.size();
  };
  const double mx = mean(x), my = mean(y);
  double ss = 0;
  for (double a : x) ss += (a - mx) * (a - mx);
  for (double a : y) ss += (a - my) * (a - my);
  const double sp2 = ss / (x.size() + y.size() - 2.0);
  return (mx - my) / std::sqrt(sp2 * (1.0 / x.size() + 1.0 / y.size()));
}

// Central finite differences of the mean squared reconstruction error with
// respect to every parameter, compared with backprop.  Returns the largest
// relative error |g - n| / max(|g|, |n|) over coordinates whose magnitude
// exceeds `floor`.
inline double GradientCheck(uint64_t seed, double step = 1e-4, double floor = 1e-7) {
  ModelConfig cfg;
  cfg.input_dim = 20;
  cfg.intermediate_dim = 8;
  cfg.hidden_dim = 2;
  cfg.output_dim = 10;
  cfg.init_seed = seed;
  AutoencoderT<double> params = InitModel<double>(cfg);
  Rng rng(DeriveSeed(seed, "gradient-check"));
  // Non-zero biases so every term of the backward pass is exercised.
  for (auto *layer : params.Layers())
    for (Eigen::Index i = 0; i < layer->bias.size(); ++i) layer->bias(i) = 0.1 * rng.Normal();
  MatrixT<double> x(4, cfg.input_dim), y(4, cfg.output_dim);
  for (Eigen::Index i = 0; i < x.size(); ++i) x.data()[i] = rng.Normal();
  for (Eigen::Index i = 0; i < y.size(); ++i) y.data()[i] = rng.Normal();

  const AutoencoderT<double> grads = Backward<double>(params, x, y);
  auto loss = [&]() { return MseLoss<double>(Forward<double>(params, x).output, y); };
  auto layers = params.Layers();
  auto glayers = const_cast<AutoencoderT<double> &>(grads).Layers();
  double worst = 0.0;
  auto probe = [&](double *value, double analytic) {
    const double keep = *value;
    *value = keep + step;
    const double up = loss();
    *value = keep - step;
    const double down = loss();
    *value = keep;
    const double numeric = (up - down) / (2.0 * step);
    const double scale = std::max(std::fabs(analytic), std::fabs(numeric));
    if (scale > floor) worst = std::max(worst, std::fabs(analytic - numeric) / scale);
  };
  for (size_t l = 0; l < layers.size(); ++l) {
    for (Eigen::Index i = 0; i < layers[l]->weight.size(); ++i)
      probe(layers[l]->weight.data() + i, glayers[l]->weight.data()[i]);
    for (Eigen::Index i = 0; i < layers[l]->bias.size(); ++i)
      probe(layers[l]->bias.data() + i, glayers[l]->bias.data()[i]);
  }
  return worst;
}

// Kolmogorov-Smirnov distance of a sample from U[0, 1].
inline double KsUniform(std::vector<double> p) {
  std::sort(p.begin(), p.end());
  const double n = static_cast<double>(p.size());
  double d = 0.0;
  for (size_t i = 0; i < p.size(); ++i)
    d = std::max({d, (i + 1) / n - p[i], p[i] - i / n});
  return d;
}

}  // namespace oracle
}  // namespace phonacq

#endif  // PHONACQ_TESTS_ORACLES_H_
