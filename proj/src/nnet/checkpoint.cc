// src/nnet/checkpoint.cc

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

#include "nnet/checkpoint.h"

#include <cstring>
#include <fstream>

#include "base/binary-io.h"
#include "base/error.h"

namespace phonacq {

void SaveCheckpoint(const Checkpoint &ckpt, std::ostream &os) {
  const ModelConfig &c = ckpt.params.config;
  os.write("PHNA", 4);
  WriteLE<uint16_t>(os, kCheckpointVersion);
  WriteLE<uint32_t>(os, static_cast<uint32_t>(c.input_dim));
  WriteLE<uint32_t>(os, static_cast<uint32_t>(c.intermediate_dim));
  WriteLE<uint32_t>(os, static_cast<uint32_t>(c.hidden_dim));
  WriteLE<uint32_t>(os, static_cast<uint32_t>(c.output_dim));
  WriteLE<uint64_t>(os, c.init_seed);
  const FeatureConfig &f = ckpt.features;
  WriteLE<double>(os, f.win_len_s);
  WriteLE<double>(os, f.step_s);
  WriteLE<uint32_t>(os, static_cast<uint32_t>(f.n_mfcc));
  WriteLE<uint32_t>(os, static_cast<uint32_t>(f.n_mel_filters));
  WriteLE<uint32_t>(os, static_cast<uint32_t>(f.fft_size));
  WriteLE<double>(os, f.preemphasis);
  WriteLE<double>(os, f.fmin);
  WriteLE<double>(os, f.fmax);
  const auto n = static_cast<uint32_t>(ckpt.normalizer.mean.size());
  WriteLE<uint32_t>(os, n);
  WriteFloats(os, ckpt.normalizer.mean.data(), n);
  WriteFloats(os, ckpt.normalizer.sd.data(), n);
  for (const auto *l : ckpt.params.Layers()) {
    WriteFloats(os, l->weight.data(), static_cast<size_t>(l->weight.size()));
    WriteFloats(os, l->bias.data(), static_cast<size_t>(l->bias.size()));
  }
}

Checkpoint LoadCheckpoint(std::istream &is) {
  char magic[4];
  is.read(magic, 4);
  if (is.gcount() != 4) Fail(ErrorCode::kTruncated, "checkpoint: missing header");
  if (std::memcmp(magic, "PHNA", 4) != 0)
    Fail(ErrorCode::kVersionMismatch, "checkpoint: bad magic");
  const auto version = ReadLE<uint16_t>(is);
  if (version != kCheckpointVersion)
    Fail(ErrorCode::kVersionMismatch,
         "checkpoint: unsupported version " + std::to_string(version));
  ModelConfig c;
  c.input_dim = static_cast<int>(ReadLE<uint32_t>(is));
  c.intermediate_dim = static_cast<int>(ReadLE<uint32_t>(is));
  c.hidden_dim = static_cast<int>(ReadLE<uint32_t>(is));
  c.output_dim = static_cast<int>(ReadLE<uint32_t>(is));
  c.init_seed = ReadLE<uint64_t>(is);
  c.Check();
  Checkpoint ckpt;
  FeatureConfig &f = ckpt.features;
  f.win_len_s = ReadLE<double>(is);
  f.step_s = ReadLE<double>(is);
  f.n_mfcc = static_cast<int>(ReadLE<uint32_t>(is));
  f.n_mel_filters = static_cast<int>(ReadLE<uint32_t>(is));
  f.fft_size = static_cast<int>(ReadLE<uint32_t>(is));
  f.preemphasis = ReadLE<double>(is);
  f.fmin = ReadLE<double>(is);
  f.fmax = ReadLE<double>(is);
  const auto n = ReadLE<uint32_t>(is);
  ckpt.normalizer.mean.resize(n);
  ckpt.normalizer.sd.resize(n);
  ReadFloats(is, ckpt.normalizer.mean.data(), n);
  ReadFloats(is, ckpt.normalizer.sd.data(), n);
  // Shapes come from the config; values are overwritten below.
  ckpt.params = InitModel<float>(c).ZerosLike();
  for (auto *l : ckpt.params.Layers()) {
    ReadFloats(is, l->weight.data(), static_cast<size_t>(l->weight.size()));
    ReadFloats(is, l->bias.data(), static_cast<size_t>(l->bias.size()));
  }
  return ckpt;
}

void SaveCheckpoint(const Checkpoint &ckpt, const std::string &path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) Fail(ErrorCode::kUnwritable, "cannot write " + path);
  SaveCheckpoint(ckpt, os);
  if (!os) Fail(ErrorCode::kUnwritable, "write failed: " + path);
}

Checkpoint LoadCheckpoint(const std::string &path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) Fail(ErrorCode::kMissingFile, "cannot open " + path);
  return LoadCheckpoint(is);
}

}  // namespace phonacq
