// src/feat/frame-matrix.h

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

#ifndef PHONACQ_FEAT_FRAME_MATRIX_H_
#define PHONACQ_FEAT_FRAME_MATRIX_H_

#include <Eigen/Core>

namespace phonacq {

using FloatMatrix = Eigen::Matrix<float, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Time-major T x C matrix of per-frame coefficients.
struct FrameMatrix {
  FloatMatrix data;
  float frame_rate = 100.0f;

  Eigen::Index NumFrames() const { return data.rows(); }
  Eigen::Index NumCoeffs() const { return data.cols(); }
};

inline constexpr int kNumStatic = 13;
inline constexpr int kNumWithDynamics = 39;

}  // namespace phonacq

#endif  // PHONACQ_FEAT_FRAME_MATRIX_H_
