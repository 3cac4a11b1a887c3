// src/feat/feature-cache.h

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

#ifndef PHONACQ_FEAT_FEATURE_CACHE_H_
#define PHONACQ_FEAT_FEATURE_CACHE_H_

#include <iosfwd>
#include <string>

#include "feat/frame-matrix.h"

namespace phonacq {

// Layout: "PHNF", u16 version, u32 rows, u32 cols, f32 frame_rate, then
// rows*cols little-endian f32 in row-major order.
inline constexpr uint16_t kFeatureCacheVersion = 1;

void WriteFeatureCache(const FrameMatrix &fm, std::ostream &os);
FrameMatrix ReadFeatureCache(std::istream &is);

void WriteFeatureCache(const FrameMatrix &fm, const std::string &path);
/// Throws kVersionMismatch on a bad magic or version, kTruncated on short
/// files.
FrameMatrix ReadFeatureCache(const std::string &path);

}  // namespace phonacq

#endif  // PHONACQ_FEAT_FEATURE_CACHE_H_
