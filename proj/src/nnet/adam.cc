// src/nnet/adam.cc

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

#include "nnet/adam.h"

#include <cmath>

namespace phonacq {

template <typename Real>
void AdamUpdate(std::span<Real> param, std::span<const Real> grad, std::span<Real> m,
                std::span<Real> v, int64_t step, const AdamOptions &opts) {
  const double bc1 = 1.0 - std::pow(opts.beta1, static_cast<double>(step));
  const double bc2 = 1.0 - std::pow(opts.beta2, static_cast<double>(step));
  const Real b1 = static_cast<Real>(opts.beta1), b2 = static_cast<Real>(opts.beta2);
  const Real step_size = static_cast<Real>(opts.learning_rate / bc1);
  const Real inv_sqrt_bc2 = static_cast<Real>(1.0 / std::sqrt(bc2));
  const Real eps = static_cast<Real>(opts.epsilon);
  for (size_t i = 0; i < param.size(); ++i) {
    const Real g = grad[i];
    m[i] = b1 * m[i] + (Real(1) - b1) * g;
    v[i] = b2 * v[i] + (Real(1) - b2) * g * g;
    param[i] -= step_size * m[i] / (std::sqrt(v[i]) * inv_sqrt_bc2 + eps);
  }
}

template <typename Real>
AdamStateT<Real> InitAdamState(const AutoencoderT<Real> &params) {
  return {params.ZerosLike(), params.ZerosLike(), 0};
}

template <typename Real>
void AdamStep(AutoencoderT<Real> *params, const AutoencoderT<Real> &grads,
              AdamStateT<Real> *state, const AdamOptions &opts) {
  ++state->step;
  auto p = params->Layers();
  auto g = grads.Layers();
  auto m = state->m.Layers();
  auto v = state->v.Layers();
  auto span_of = [](auto &mat) { return std::span(mat.data(), static_cast<size_t>(mat.size())); };
  for (size_t i = 0; i < p.size(); ++i) {
    AdamUpdate<Real>(span_of(p[i]->weight), span_of(g[i]->weight), span_of(m[i]->weight),
                     span_of(v[i]->weight), state->step, opts);
    AdamUpdate<Real>(span_of(p[i]->bias), span_of(g[i]->bias), span_of(m[i]->bias),
                     span_of(v[i]->bias), state->step, opts);
  }
}

template void AdamUpdate<float>(std::span<float>, std::span<const float>, std::span<float>,
                                std::span<float>, int64_t, const AdamOptions &);
template void AdamUpdate<double>(std::span<double>, std::span<const double>,
                                 std::span<double>, std::span<double>, int64_t,
                                 const AdamOptions &);
template AdamStateT<float> InitAdamState<float>(const AutoencoderT<float> &);
template AdamStateT<double> InitAdamState<double>(const AutoencoderT<double> &);
template void AdamStep<float>(AutoencoderT<float> *, const AutoencoderT<float> &,
                              AdamStateT<float> *, const AdamOptions &);
template void AdamStep<double>(AutoencoderT<double> *, const AutoencoderT<double> &,
                               AdamStateT<double> *, const AdamOptions &);

}  // namespace phonacq
