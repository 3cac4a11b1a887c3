// src/segments/segments.cc

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

#include "segments/segments.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "base/error.h"
#include "base/log.h"
#include "base/random.h"
#include "feat/feature-cache.h"

namespace phonacq {

namespace {

int DrawLength(const SegmentLengthStats &stats, Rng *rng) {
  double x;
  do {
    x = rng->Normal(stats.mean_frames, stats.sd_frames);
  } while (x <= 0.0);
  return std::max(1, static_cast<int>(std::lround(x)));
}

}  // namespace

SegmentLengthStats EstimateLengthStats(
    const std::vector<std::vector<AlignedToken>> &alignments, double frame_rate) {
  double sum = 0.0, sumsq = 0.0;
  size_t n = 0;
  for (const auto &al : alignments) {
    for (const auto &tok : al) {
      if (tok.tier != Tier::kPhone) continue;
      const double frames = (tok.end_s - tok.start_s) * frame_rate;
      sum += frames;
      sumsq += frames * frames;
      ++n;
    }
  }
  if (n == 0)
    Fail(ErrorCode::kInsufficientData, "no phone tokens to estimate segment lengths");
  SegmentLengthStats s;
  s.mean_frames = sum / n;
  s.sd_frames = std::sqrt(std::max(0.0, sumsq / n - s.mean_frames * s.mean_frames));
  return s;
}

std::vector<int> SampleLengths(const SegmentLengthStats &stats, size_t count,
                               uint64_t seed) {
  Rng rng(seed);
  std::vector<int> out(count);
  for (auto &len : out) len = DrawLength(stats, &rng);
  return out;
}

size_t DefaultSegmentCount(const std::vector<RecordingFeatures> &recordings,
                           const SegmentLengthStats &stats) {
  double total = 0.0;
  for (const auto &r : recordings) total += static_cast<double>(r.features.NumFrames());
  return static_cast<size_t>(std::lround(total / std::max(1.0, stats.mean_frames)));
}

FloatMatrix ResampleTime(const FloatMatrix &frames, int out_frames) {
  const Eigen::Index T = frames.rows();
  if (T < 1) Fail(ErrorCode::kEmptyInput, "cannot resample an empty segment");
  FloatMatrix out(out_frames, frames.cols());
  if (T == 1) {
    for (int j = 0; j < out_frames; ++j) out.row(j) = frames.row(0);
    return out;
  }
  for (int j = 0; j < out_frames; ++j) {
    const double pos = out_frames == 1 ? 0.0
                                       : static_cast<double>(j) * (T - 1) / (out_frames - 1);
    Eigen::Index lo = static_cast<Eigen::Index>(std::floor(pos));
    lo = std::min(lo, T - 1);
    const Eigen::Index hi = std::min(lo + 1, T - 1);
    const float w = static_cast<float>(pos - lo);
    if (w == 0.0f)
      out.row(j) = frames.row(lo);
    else
      out.row(j) = (1.0f - w) * frames.row(lo) + w * frames.row(hi);
  }
  return out;
}

Segment MakeSegment(const FloatMatrix &slice, SegmentSource source,
                    std::optional<std::string> label) {
  Segment seg;
  seg.input = ResampleTime(slice);
  seg.target = seg.input.leftCols(std::min<Eigen::Index>(kNumStatic, seg.input.cols()));
  seg.label = std::move(label);
  seg.source = std::move(source);
  return seg;
}

std::vector<Segment> SampleTrainingSegments(
    const std::vector<RecordingFeatures> &recordings,
    const SegmentLengthStats &stats, size_t n_segments, uint64_t seed) {
  std::vector<Segment> out;
  if (n_segments == 0) return out;
  std::vector<uint64_t> cumulative;
  uint64_t total = 0;
  for (const auto &r : recordings) {
    total += static_cast<uint64_t>(r.features.NumFrames());
    cumulative.push_back(total);
  }
  if (total == 0)
    Fail(ErrorCode::kEmptyInput, "cannot sample training segments from an empty feature set");

  Rng rng(seed);
  out.reserve(n_segments);
  for (size_t i = 0; i < n_segments; ++i) {
    const uint64_t pick = rng.UniformInt(total);
    const size_t r = static_cast<size_t>(
        std::upper_bound(cumulative.begin(), cumulative.end(), pick) - cumulative.begin());
    const auto &rec = recordings[r];
    const int T = static_cast<int>(rec.features.NumFrames());
    const int len = std::min(DrawLength(stats, &rng), T);
    const int start = static_cast<int>(rng.UniformInt(static_cast<uint64_t>(T - len + 1)));
    out.push_back(MakeSegment(rec.features.data.middleRows(start, len),
                              {rec.recording_id, start, len}, std::nullopt));
  }
  return out;
}

EvalSegmentResult ExtractEvalSegments(const RecordingFeatures &recording,
                                      const std::vector<AlignedToken> &alignment) {
  EvalSegmentResult res;
  const double rate = recording.features.frame_rate;
  const long T = static_cast<long>(recording.features.NumFrames());
  for (const auto &tok : alignment) {
    if (tok.tier != Tier::kPhone) continue;
    // Small tolerance so that times written with finite precision land on
    // the intended frame.
    long first = static_cast<long>(std::ceil(tok.start_s * rate - 1e-6));
    long last = static_cast<long>(std::ceil(tok.end_s * rate - 1e-6));
    first = std::clamp(first, 0L, T);
    last = std::clamp(last, 0L, T);
    if (last <= first) {
      ++res.skipped_tokens;
      continue;
    }
    const int len = static_cast<int>(last - first);
    res.segments.push_back(
        MakeSegment(recording.features.data.middleRows(first, len),
                    {recording.recording_id, static_cast<int>(first), len}, tok.label));
  }
  if (res.skipped_tokens > 0)
    PHONACQ_VLOG(2) << recording.recording_id << ": skipped " << res.skipped_tokens
                    << " tokens that cover no frame";
  return res;
}

void WriteSegments(const std::vector<Segment> &segments,
                   const std::string &matrix_path, const std::string &labels_path) {
  const Eigen::Index width = segments.empty() ? kSegmentFrames * kNumWithDynamics
                                              : segments[0].input.size();
  FrameMatrix fm;
  fm.data.resize(static_cast<Eigen::Index>(segments.size()), width);
  std::ofstream labels(labels_path);
  if (!labels) Fail(ErrorCode::kUnwritable, "cannot write " + labels_path);
  for (size_t i = 0; i < segments.size(); ++i) {
    const auto &s = segments[i];
    fm.data.row(static_cast<Eigen::Index>(i)) =
        Eigen::Map<const Eigen::RowVectorXf>(s.input.data(), s.input.size());
    labels << i << '\t' << s.label.value_or("") << '\t' << s.source.recording_id << '\t'
           << s.source.start_frame << '\t' << s.source.length << '\n';
  }
  WriteFeatureCache(fm, matrix_path);
}

std::vector<Segment> ReadSegments(const std::string &matrix_path,
                                  const std::string &labels_path) {
  FrameMatrix fm = ReadFeatureCache(matrix_path);
  std::ifstream labels(labels_path);
  if (!labels) Fail(ErrorCode::kMissingFile, "cannot open " + labels_path);
  const Eigen::Index cols = fm.data.cols() / kSegmentFrames;
  if (cols * kSegmentFrames != fm.data.cols())
    Fail(ErrorCode::kDimensionMismatch, "segment matrix width is not a multiple of 25");
  std::vector<Segment> out;
  std::string line;
  for (Eigen::Index i = 0; i < fm.data.rows(); ++i) {
    if (!std::getline(labels, line))
      Fail(ErrorCode::kTruncated, labels_path + ": fewer rows than the segment matrix");
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, '\t');) f.push_back(cell);
    if (f.size() == 4) f.insert(f.begin() + 1, "");
    if (f.size() != 5) Fail(ErrorCode::kParse, labels_path + ": bad row " + line);
    Segment s;
    s.input = Eigen::Map<const FloatMatrix>(fm.data.row(i).data(), kSegmentFrames, cols);
    s.target = s.input.leftCols(std::min<Eigen::Index>(kNumStatic, cols));
    if (!f[1].empty()) s.label = f[1];
    s.source = {f[2], std::stoi(f[3]), std::stoi(f[4])};
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace phonacq
