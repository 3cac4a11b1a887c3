// src/feat/feature-cache.cc

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

#include "feat/feature-cache.h"

#include <cstring>
#include <fstream>

#include "base/binary-io.h"
#include "base/error.h"

namespace phonacq {

void WriteFeatureCache(const FrameMatrix &fm, std::ostream &os) {
  os.write("PHNF", 4);
  WriteLE<uint16_t>(os, kFeatureCacheVersion);
  WriteLE<uint32_t>(os, static_cast<uint32_t>(fm.data.rows()));
  WriteLE<uint32_t>(os, static_cast<uint32_t>(fm.data.cols()));
  WriteLE<float>(os, fm.frame_rate);
  WriteFloats(os, fm.data.data(), static_cast<size_t>(fm.data.size()));
}

FrameMatrix ReadFeatureCache(std::istream &is) {
  char magic[4];
  is.read(magic, 4);
  if (is.gcount() != 4) Fail(ErrorCode::kTruncated, "feature cache: missing header");
  if (std::memcmp(magic, "PHNF", 4) != 0)
    Fail(ErrorCode::kVersionMismatch, "feature cache: bad magic");
  const auto version = ReadLE<uint16_t>(is);
  if (version != kFeatureCacheVersion)
    Fail(ErrorCode::kVersionMismatch,
         "feature cache: unsupported version " + std::to_string(version));
  const auto rows = ReadLE<uint32_t>(is);
  const auto cols = ReadLE<uint32_t>(is);
  FrameMatrix fm;
  fm.frame_rate = ReadLE<float>(is);
  fm.data.resize(rows, cols);
  ReadFloats(is, fm.data.data(), static_cast<size_t>(rows) * cols);
  return fm;
}

void WriteFeatureCache(const FrameMatrix &fm, const std::string &path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) Fail(ErrorCode::kUnwritable, "cannot write " + path);
  WriteFeatureCache(fm, os);
  if (!os) Fail(ErrorCode::kUnwritable, "write failed: " + path);
}

FrameMatrix ReadFeatureCache(const std::string &path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) Fail(ErrorCode::kMissingFile, "cannot open " + path);
  return ReadFeatureCache(is);
}

}  // namespace phonacq
