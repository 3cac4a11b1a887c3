// src/nnet/autoencoder.cc

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

#include "nnet/autoencoder.h"

#include <cmath>
#include <fstream>

#include "base/error.h"
#include "base/random.h"
#include "json.hpp"

namespace phonacq {

void ModelConfig::Check() const {
  if (input_dim < 1 || intermediate_dim < 1 || hidden_dim < 1 || output_dim < 1)
    Fail(ErrorCode::kInvalidArgument, "model dimensions must be positive");
}

int64_t ModelConfig::NumEncoderParams() const {
  const int64_t I = intermediate_dim;
  return (int64_t{input_dim} * I + I) + 2 * (I * I + I) + (I * hidden_dim + hidden_dim);
}

int64_t ModelConfig::NumParams() const {
  const int64_t I = intermediate_dim;
  const int64_t decoder =
      (int64_t{hidden_dim} * I + I) + 2 * (I * I + I) + (I * output_dim + output_dim);
  return NumEncoderParams() + decoder;
}

ModelConfig ModelConfigFromJson(const nlohmann::json &j) {
  ModelConfig c;
  c.input_dim = j.value("input_dim", c.input_dim);
  c.intermediate_dim = j.value("intermediate_dim", c.intermediate_dim);
  c.hidden_dim = j.value("hidden_dim", c.hidden_dim);
  c.output_dim = j.value("output_dim", c.output_dim);
  c.init_seed = j.value("init_seed", c.init_seed);
  c.Check();
  return c;
}

ModelConfig ReadModelConfig(const std::string &path) {
  std::ifstream is(path);
  if (!is) Fail(ErrorCode::kMissingFile, "cannot open " + path);
  try {
    return ModelConfigFromJson(nlohmann::json::parse(is));
  } catch (const nlohmann::json::exception &e) {
    Fail(ErrorCode::kParse, path + ": " + e.what());
  }
}

template <typename Real>
std::vector<LinearT<Real> *> AutoencoderT<Real>::Layers() {
  return {&enc_in, &enc_res.first, &enc_res.second, &enc_out,
          &dec_in, &dec_res.first, &dec_res.second, &dec_out};
}

template <typename Real>
std::vector<const LinearT<Real> *> AutoencoderT<Real>::Layers() const {
  return {&enc_in, &enc_res.first, &enc_res.second, &enc_out,
          &dec_in, &dec_res.first, &dec_res.second, &dec_out};
}

template <typename Real>
int64_t AutoencoderT<Real>::NumParams() const {
  int64_t n = 0;
  for (const auto *l : Layers()) n += l->weight.size() + l->bias.size();
  return n;
}

template <typename Real>
AutoencoderT<Real> AutoencoderT<Real>::ZerosLike() const {
  AutoencoderT<Real> z;
  z.config = config;
  auto dst = z.Layers();
  auto src = Layers();
  for (size_t i = 0; i < src.size(); ++i) {
    dst[i]->weight = MatrixT<Real>::Zero(src[i]->OutDim(), src[i]->InDim());
    dst[i]->bias = RowVectorT<Real>::Zero(src[i]->OutDim());
  }
  return z;
}

namespace {

template <typename Real>
LinearT<Real> MakeLinear(int in, int out, Rng *rng) {
  LinearT<Real> l;
  l.weight.resize(out, in);
  l.bias = RowVectorT<Real>::Zero(out);
  const double bound = std::sqrt(6.0 / in);
  for (Eigen::Index i = 0; i < l.weight.size(); ++i)
    l.weight.data()[i] = static_cast<Real>(bound * (2.0 * rng->Uniform() - 1.0));
  return l;
}

template <typename Real>
MatrixT<Real> Affine(const LinearT<Real> &l, const MatrixT<Real> &x) {
  MatrixT<Real> y(x.rows(), l.OutDim());
  y.noalias() = x * l.weight.transpose();
  y.rowwise() += l.bias;
  return y;
}

template <typename Real>
void ReluInPlace(MatrixT<Real> *m) {
  *m = m->cwiseMax(Real(0));
}

// Zeroes entries of `grad` where the ReLU output was not positive.
template <typename Real>
void ReluBackward(const MatrixT<Real> &relu_out, MatrixT<Real> *grad) {
  *grad = (relu_out.array() > Real(0)).select(grad->array(), Real(0));
}

// Accumulates weight and bias gradients and returns the input gradient.
template <typename Real>
MatrixT<Real> LinearBackward(const LinearT<Real> &l, const MatrixT<Real> &x,
                             const MatrixT<Real> &grad_out, LinearT<Real> *g) {
  g->weight.noalias() = grad_out.transpose() * x;
  g->bias = grad_out.colwise().sum();
  MatrixT<Real> gx(grad_out.rows(), l.InDim());
  gx.noalias() = grad_out * l.weight;
  return gx;
}

// Returns the block output; `inner` receives ReLU(W_a x + b_a).
template <typename Real>
MatrixT<Real> ResidualForward(const ResidualBlockT<Real> &b, const MatrixT<Real> &x,
                              MatrixT<Real> *inner) {
  *inner = Affine(b.first, x);
  ReluInPlace(inner);
  MatrixT<Real> out = Affine(b.second, *inner);
  out += x;
  ReluInPlace(&out);
  return out;
}

template <typename Real>
MatrixT<Real> ResidualBackward(const ResidualBlockT<Real> &b, const MatrixT<Real> &x,
                               const MatrixT<Real> &inner, const MatrixT<Real> &out,
                               MatrixT<Real> grad_out, ResidualBlockT<Real> *g) {
  ReluBackward(out, &grad_out);
  MatrixT<Real> g_inner = LinearBackward(b.second, inner, grad_out, &g->second);
  ReluBackward(inner, &g_inner);
  MatrixT<Real> gx = LinearBackward(b.first, x, g_inner, &g->first);
  gx += grad_out;
  return gx;
}

template <typename Real>
void CheckInput(const AutoencoderT<Real> &p, const MatrixT<Real> &batch) {
  if (batch.cols() != p.enc_in.InDim())
    Fail(ErrorCode::kDimensionMismatch,
         "batch has " + std::to_string(batch.cols()) + " columns, model expects " +
             std::to_string(p.enc_in.InDim()));
}

}  // namespace

template <typename Real>
AutoencoderT<Real> InitModel(const ModelConfig &cfg) {
  cfg.Check();
  Rng rng(cfg.init_seed);
  AutoencoderT<Real> p;
  p.config = cfg;
  const int I = cfg.intermediate_dim;
  p.enc_in = MakeLinear<Real>(cfg.input_dim, I, &rng);
  p.enc_res.first = MakeLinear<Real>(I, I, &rng);
  p.enc_res.second = MakeLinear<Real>(I, I, &rng);
  p.enc_out = MakeLinear<Real>(I, cfg.hidden_dim, &rng);
  p.dec_in = MakeLinear<Real>(cfg.hidden_dim, I, &rng);
  p.dec_res.first = MakeLinear<Real>(I, I, &rng);
  p.dec_res.second = MakeLinear<Real>(I, I, &rng);
  p.dec_out = MakeLinear<Real>(I, cfg.output_dim, &rng);
  return p;
}

template <typename Real>
MatrixT<Real> EncodeBatch(const AutoencoderT<Real> &p, const MatrixT<Real> &batch) {
  CheckInput(p, batch);
  MatrixT<Real> h = Affine(p.enc_in, batch);
  ReluInPlace(&h);
  MatrixT<Real> inner;
  MatrixT<Real> r = ResidualForward(p.enc_res, h, &inner);
  return Affine(p.enc_out, r);
}

template <typename Real>
void ForwardWithCache(const AutoencoderT<Real> &p, const MatrixT<Real> &batch,
                      ForwardCache<Real> *c) {
  CheckInput(p, batch);
  c->enc_h = Affine(p.enc_in, batch);
  ReluInPlace(&c->enc_h);
  c->enc_r = ResidualForward(p.enc_res, c->enc_h, &c->enc_u);
  c->hidden = Affine(p.enc_out, c->enc_r);
  c->dec_h = Affine(p.dec_in, c->hidden);
  ReluInPlace(&c->dec_h);
  c->dec_r = ResidualForward(p.dec_res, c->dec_h, &c->dec_u);
  c->output = Affine(p.dec_out, c->dec_r);
}

template <typename Real>
ForwardResult<Real> Forward(const AutoencoderT<Real> &p, const MatrixT<Real> &batch) {
  ForwardCache<Real> c;
  ForwardWithCache(p, batch, &c);
  return {std::move(c.hidden), std::move(c.output)};
}

template <typename Real>
double MseLoss(const MatrixT<Real> &output, const MatrixT<Real> &target) {
  if (output.rows() != target.rows() || output.cols() != target.cols())
    Fail(ErrorCode::kDimensionMismatch, "loss: output and target shapes differ");
  if (output.size() == 0) return 0.0;
  double acc = 0.0;
  for (Eigen::Index r = 0; r < output.rows(); ++r) {
    double row = 0.0;
    for (Eigen::Index c = 0; c < output.cols(); ++c) {
      const double d = static_cast<double>(output(r, c)) - static_cast<double>(target(r, c));
      row += d * d;
    }
    acc += row;
  }
  return acc / static_cast<double>(output.size());
}

template <typename Real>
AutoencoderT<Real> Backward(const AutoencoderT<Real> &p, const MatrixT<Real> &batch,
                            const MatrixT<Real> &target, double *loss) {
  ForwardCache<Real> c;
  ForwardWithCache(p, batch, &c);
  if (target.rows() != c.output.rows() || target.cols() != c.output.cols())
    Fail(ErrorCode::kDimensionMismatch, "backward: target shape does not match output");
  if (loss) *loss = MseLoss(c.output, target);

  AutoencoderT<Real> g;
  g.config = p.config;
  const Real scale = Real(2) / static_cast<Real>(c.output.size());
  MatrixT<Real> grad = (c.output - target) * scale;

  grad = LinearBackward(p.dec_out, c.dec_r, grad, &g.dec_out);
  grad = ResidualBackward(p.dec_res, c.dec_h, c.dec_u, c.dec_r, std::move(grad), &g.dec_res);
  ReluBackward(c.dec_h, &grad);
  grad = LinearBackward(p.dec_in, c.hidden, grad, &g.dec_in);

  grad = LinearBackward(p.enc_out, c.enc_r, grad, &g.enc_out);
  grad = ResidualBackward(p.enc_res, c.enc_h, c.enc_u, c.enc_r, std::move(grad), &g.enc_res);
  ReluBackward(c.enc_h, &grad);
  LinearBackward(p.enc_in, batch, grad, &g.enc_in);
  return g;
}

#define PHONACQ_INSTANTIATE(Real)                                                    \
  template struct AutoencoderT<Real>;                                                \
  template AutoencoderT<Real> InitModel<Real>(const ModelConfig &);                  \
  template ForwardResult<Real> Forward<Real>(const AutoencoderT<Real> &,             \
                                             const MatrixT<Real> &);                 \
  template MatrixT<Real> EncodeBatch<Real>(const AutoencoderT<Real> &,               \
                                           const MatrixT<Real> &);                   \
  template void ForwardWithCache<Real>(const AutoencoderT<Real> &,                   \
                                       const MatrixT<Real> &, ForwardCache<Real> *); \
  template double MseLoss<Real>(const MatrixT<Real> &, const MatrixT<Real> &);       \
  template AutoencoderT<Real> Backward<Real>(const AutoencoderT<Real> &,             \
                                             const MatrixT<Real> &,                  \
                                             const MatrixT<Real> &, double *);

PHONACQ_INSTANTIATE(float)
PHONACQ_INSTANTIATE(double)

#undef PHONACQ_INSTANTIATE

}  // namespace phonacq
