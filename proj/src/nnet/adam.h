// src/nnet/adam.h

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

#ifndef PHONACQ_NNET_ADAM_H_
#define PHONACQ_NNET_ADAM_H_

#include <cstdint>
#include <span>

#include "nnet/autoencoder.h"

namespace phonacq {

struct AdamOptions {
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

/// One bias-corrected Adam update of a flat parameter array.  `step` is the
/// 1-based index of this update.
template <typename Real>
void AdamUpdate(std::span<Real> param, std::span<const Real> grad, std::span<Real> m,
                std::span<Real> v, int64_t step, const AdamOptions &opts);

template <typename Real>
struct AdamStateT {
  AutoencoderT<Real> m;
  AutoencoderT<Real> v;
  int64_t step = 0;  // updates taken so far
};

template <typename Real>
AdamStateT<Real> InitAdamState(const AutoencoderT<Real> &params);

template <typename Real>
void AdamStep(AutoencoderT<Real> *params, const AutoencoderT<Real> &grads,
              AdamStateT<Real> *state, const AdamOptions &opts);

using AdamState = AdamStateT<float>;

}  // namespace phonacq

#endif  // PHONACQ_NNET_ADAM_H_
