// src/segments/segments.h

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

#ifndef PHONACQ_SEGMENTS_SEGMENTS_H_
#define PHONACQ_SEGMENTS_SEGMENTS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "corpus/alignment.h"
#include "feat/frame-matrix.h"

namespace phonacq {

inline constexpr int kSegmentFrames = 25;

struct SegmentSource {
  std::string recording_id;
  int start_frame = 0;
  int length = 0;  // frames before time resampling
};

/// Fixed-length autoencoder example.  `target` always equals the first 13
/// columns of `input`.
struct Segment {
  FloatMatrix input;   // kSegmentFrames x 39
  FloatMatrix target;  // kSegmentFrames x 13
  std::optional<std::string> label;
  SegmentSource source;
};

struct RecordingFeatures {
  std::string recording_id;
  FrameMatrix features;  // T x 39
};

struct SegmentLengthStats {
  double mean_frames = 0.0;
  double sd_frames = 0.0;  // population sd
};

/// Mean and sd of phone-tier token durations, in frames.  Throws
/// kInsufficientData when no phone tokens exist.
SegmentLengthStats EstimateLengthStats(
    const std::vector<std::vector<AlignedToken>> &alignments,
    double frame_rate = 100.0);

/// Normal(mean, sd) draws, redrawn until positive, rounded, floored at 1.
std::vector<int> SampleLengths(const SegmentLengthStats &stats, size_t count,
                               uint64_t seed);

/// Number of training segments that covers the corpus about once.
size_t DefaultSegmentCount(const std::vector<RecordingFeatures> &recordings,
                           const SegmentLengthStats &stats);

/// Context-free random segments.  Each draw picks a recording with
/// probability proportional to its frame count, a truncated-normal length
/// (clipped to the recording) and a uniform start, then resamples to 25
/// frames.  Segments carry no label.
std::vector<Segment> SampleTrainingSegments(
    const std::vector<RecordingFeatures> &recordings,
    const SegmentLengthStats &stats, size_t n_segments, uint64_t seed);

struct EvalSegmentResult {
  std::vector<Segment> segments;
  int skipped_tokens = 0;  // phone tokens that covered no frame
};

/// One labeled segment per phone-tier token.  A frame t belongs to a token
/// when t / frame_rate lies in [start_s, end_s).  Silence and noise tokens
/// are skipped.
EvalSegmentResult ExtractEvalSegments(const RecordingFeatures &recording,
                                      const std::vector<AlignedToken> &alignment);

/// Per-column linear interpolation onto `out_frames` evenly spaced positions
/// over [0, T-1].  A single input frame is replicated.
FloatMatrix ResampleTime(const FloatMatrix &frames, int out_frames = kSegmentFrames);

/// Builds a segment from a frame slice (resampling and target extraction).
Segment MakeSegment(const FloatMatrix &slice, SegmentSource source,
                    std::optional<std::string> label);

/// Serializes inputs as one flattened row per segment in the feature-cache
/// format, plus a TSV with index, label, recording_id, start_frame, len.
void WriteSegments(const std::vector<Segment> &segments,
                   const std::string &matrix_path, const std::string &labels_path);
std::vector<Segment> ReadSegments(const std::string &matrix_path,
                                  const std::string &labels_path);

}  // namespace phonacq

#endif  // PHONACQ_SEGMENTS_SEGMENTS_H_
