// src/nnet/checkpoint.h

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

#ifndef PHONACQ_NNET_CHECKPOINT_H_
#define PHONACQ_NNET_CHECKPOINT_H_

#include <iosfwd>
#include <string>

#include "feat/mfcc.h"
#include "nnet/autoencoder.h"
#include "nnet/trainer.h"

namespace phonacq {

// Layout: "PHNA", u16 version, u32 input_dim, u32 intermediate_dim,
// u32 hidden_dim, u32 output_dim, u64 init_seed, the feature front-end
// (f64 win_len_s, f64 step_s, u32 n_mfcc, u32 n_mel_filters, u32 fft_size,
// f64 preemphasis, f64 fmin, f64 fmax), u32 n, n f32 means, n f32
// sds, then for each of the eight layers in declaration order the out x in
// row-major weight followed by the bias, all little-endian f32.
inline constexpr uint16_t kCheckpointVersion = 1;

struct Checkpoint {
  ModelParams params;
  InputNormalizer normalizer;
  FeatureConfig features;  // front-end the model was trained on
};

void SaveCheckpoint(const Checkpoint &ckpt, std::ostream &os);
Checkpoint LoadCheckpoint(std::istream &is);
void SaveCheckpoint(const Checkpoint &ckpt, const std::string &path);
Checkpoint LoadCheckpoint(const std::string &path);

}  // namespace phonacq

#endif  // PHONACQ_NNET_CHECKPOINT_H_
