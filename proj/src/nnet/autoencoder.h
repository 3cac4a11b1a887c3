// src/nnet/autoencoder.h

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

#ifndef PHONACQ_NNET_AUTOENCODER_H_
#define PHONACQ_NNET_AUTOENCODER_H_

// Fully connected residual autoencoder:
//
//   encoder: FC(in -> I) + ReLU, ResidualBlock(I), FC(I -> H)
//   decoder: FC(H -> I) + ReLU, ResidualBlock(I), FC(I -> out)
//
// with ResidualBlock(x) = ReLU(x + W_b ReLU(W_a x + b_a) + b_b).  The last
// layer of each half is linear.  Everything is templated on the scalar type;
// training runs in float, gradient checks in double.

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "json.hpp"

namespace phonacq {

template <typename Real>
using MatrixT = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <typename Real>
using RowVectorT = Eigen::Matrix<Real, 1, Eigen::Dynamic>;

struct ModelConfig {
  int input_dim = 975;  // 25 frames x 39 coefficients
  int intermediate_dim = 256;
  int hidden_dim = 3;
  int output_dim = 325;  // 25 frames x 13 coefficients
  uint64_t init_seed = 0;

  void Check() const;
  int64_t NumParams() const;
  int64_t NumEncoderParams() const;
};

ModelConfig ReadModelConfig(const std::string &path);
/// Missing keys keep their defaults.
ModelConfig ModelConfigFromJson(const nlohmann::json &j);

template <typename Real>
struct LinearT {
  MatrixT<Real> weight;  // out x in
  RowVectorT<Real> bias;

  Eigen::Index InDim() const { return weight.cols(); }
  Eigen::Index OutDim() const { return weight.rows(); }
};

template <typename Real>
struct ResidualBlockT {
  LinearT<Real> first;
  LinearT<Real> second;
};

template <typename Real>
struct AutoencoderT {
  ModelConfig config;
  LinearT<Real> enc_in;
  ResidualBlockT<Real> enc_res;
  LinearT<Real> enc_out;
  LinearT<Real> dec_in;
  ResidualBlockT<Real> dec_res;
  LinearT<Real> dec_out;

  // The eight FC layers in declaration order (checkpoint order).
  std::vector<LinearT<Real> *> Layers();
  std::vector<const LinearT<Real> *> Layers() const;

  int64_t NumParams() const;
  // Same shapes, all zeros (used for gradients and optimizer moments).
  AutoencoderT ZerosLike() const;
};

using Linear = LinearT<float>;
using ModelParams = AutoencoderT<float>;

/// He-uniform weights in +-sqrt(6 / fan_in), zero biases; deterministic in
/// config.init_seed.
template <typename Real>
AutoencoderT<Real> InitModel(const ModelConfig &cfg);

template <typename Real>
struct ForwardResult {
  MatrixT<Real> hidden;  // B x H
  MatrixT<Real> output;  // B x out
};

/// Intermediate activations kept for backpropagation.
template <typename Real>
struct ForwardCache {
  MatrixT<Real> enc_h, enc_u, enc_r;  // FC+ReLU, block inner ReLU, block output
  MatrixT<Real> hidden;
  MatrixT<Real> dec_h, dec_u, dec_r;
  MatrixT<Real> output;
};

template <typename Real>
ForwardResult<Real> Forward(const AutoencoderT<Real> &params, const MatrixT<Real> &batch);

template <typename Real>
MatrixT<Real> EncodeBatch(const AutoencoderT<Real> &params, const MatrixT<Real> &batch);

template <typename Real>
void ForwardWithCache(const AutoencoderT<Real> &params, const MatrixT<Real> &batch,
                      ForwardCache<Real> *cache);

/// Mean of squared differences over every entry.
template <typename Real>
double MseLoss(const MatrixT<Real> &output, const MatrixT<Real> &target);

/// Gradients of MseLoss(Forward(batch).output, target) with respect to every
/// parameter.  ReLU has subgradient 0 at 0.  Returns the loss through
/// `loss` when non-null.
template <typename Real>
AutoencoderT<Real> Backward(const AutoencoderT<Real> &params, const MatrixT<Real> &batch,
                            const MatrixT<Real> &target, double *loss = nullptr);

}  // namespace phonacq

#endif  // PHONACQ_NNET_AUTOENCODER_H_
