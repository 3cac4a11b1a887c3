// src/corpus/audio.cc

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

#include "corpus/audio.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <numbers>

#include "base/binary-io.h"
#include "base/error.h"

namespace phonacq {

namespace {

uint32_t U32At(const std::vector<unsigned char> &b, size_t pos) {
  return static_cast<uint32_t>(b[pos]) | (static_cast<uint32_t>(b[pos + 1]) << 8) |
         (static_cast<uint32_t>(b[pos + 2]) << 16) |
         (static_cast<uint32_t>(b[pos + 3]) << 24);
}

uint16_t U16At(const std::vector<unsigned char> &b, size_t pos) {
  return static_cast<uint16_t>(b[pos] | (b[pos + 1] << 8));
}

constexpr uint16_t kFormatPcm = 1;
constexpr uint16_t kFormatExtensible = 0xFFFE;

}  // namespace

AudioBuffer LoadWav(const std::string &path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) Fail(ErrorCode::kMissingFile, "cannot open " + path);
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(is)),
                                   std::istreambuf_iterator<char>());
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0)
    Fail(ErrorCode::kMalformedHeader, path + ": not a RIFF/WAVE file");

  bool have_fmt = false;
  uint16_t format = 0, channels = 0, bits = 0;
  uint32_t rate = 0;
  size_t data_pos = 0, data_len = 0;
  bool have_data = false;
  size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const uint32_t len = U32At(bytes, pos + 4);
    const size_t body = pos + 8;
    if (std::memcmp(bytes.data() + pos, "fmt ", 4) == 0) {
      if (len < 16 || body + len > bytes.size())
        Fail(ErrorCode::kMalformedHeader, path + ": bad fmt chunk");
      format = U16At(bytes, body);
      channels = U16At(bytes, body + 2);
      rate = U32At(bytes, body + 4);
      bits = U16At(bytes, body + 14);
      if (format == kFormatExtensible) {
        if (len < 40)
          Fail(ErrorCode::kMalformedHeader, path + ": bad extensible fmt chunk");
        format = U16At(bytes, body + 24);  // first two bytes of the GUID
      }
      have_fmt = true;
    } else if (std::memcmp(bytes.data() + pos, "data", 4) == 0) {
      data_pos = body;
      data_len = std::min<size_t>(len, bytes.size() - body);
      if (data_len != len)
        Fail(ErrorCode::kMalformedHeader, path + ": data chunk runs past end of file");
      have_data = true;
      break;
    }
    pos = body + len + (len & 1);
  }
  if (!have_fmt || !have_data)
    Fail(ErrorCode::kMalformedHeader, path + ": missing fmt or data chunk");
  if (channels == 0 || rate == 0)
    Fail(ErrorCode::kMalformedHeader, path + ": zero channels or sample rate");
  if (format != kFormatPcm || bits != 16)
    Fail(ErrorCode::kUnsupportedEncoding,
         path + ": only 16-bit PCM is supported (format " + std::to_string(format) +
             ", " + std::to_string(bits) + " bits)");

  const size_t frame_bytes = 2u * channels;
  const size_t n = data_len / frame_bytes;
  AudioBuffer buf;
  buf.sample_rate = static_cast<int>(rate);
  buf.source_id = path;
  buf.samples.resize(n);
  for (size_t i = 0; i < n; ++i) {
    int32_t acc = 0;
    for (size_t c = 0; c < channels; ++c)
      acc += static_cast<int16_t>(U16At(bytes, data_pos + i * frame_bytes + 2 * c));
    buf.samples[i] = static_cast<float>(
        static_cast<double>(acc) / (32768.0 * channels));
  }
  return buf;
}

void WriteWavPcm16(const std::vector<std::vector<int16_t>> &channels,
                   int sample_rate, const std::string &path) {
  const uint16_t nch = static_cast<uint16_t>(channels.size());
  const size_t n = channels.empty() ? 0 : channels[0].size();
  std::ofstream os(path, std::ios::binary);
  if (!os) Fail(ErrorCode::kUnwritable, "cannot write " + path);
  const uint32_t data_len = static_cast<uint32_t>(n * nch * 2);
  os.write("RIFF", 4);
  WriteLE<uint32_t>(os, 36 + data_len);
  os.write("WAVEfmt ", 8);
  WriteLE<uint32_t>(os, 16);
  WriteLE<uint16_t>(os, kFormatPcm);
  WriteLE<uint16_t>(os, nch);
  WriteLE<uint32_t>(os, static_cast<uint32_t>(sample_rate));
  WriteLE<uint32_t>(os, static_cast<uint32_t>(sample_rate) * nch * 2);
  WriteLE<uint16_t>(os, static_cast<uint16_t>(nch * 2));
  WriteLE<uint16_t>(os, 16);
  os.write("data", 4);
  WriteLE<uint32_t>(os, data_len);
  for (size_t i = 0; i < n; ++i)
    for (const auto &ch : channels) WriteLE<int16_t>(os, ch[i]);
  if (!os) Fail(ErrorCode::kUnwritable, "write failed: " + path);
}

void WriteWav(const AudioBuffer &buf, const std::string &path) {
  std::vector<int16_t> pcm(buf.samples.size());
  for (size_t i = 0; i < pcm.size(); ++i) {
    double v = std::round(static_cast<double>(buf.samples[i]) * 32768.0);
    pcm[i] = static_cast<int16_t>(std::clamp(v, -32768.0, 32767.0));
  }
  WriteWavPcm16({pcm}, buf.sample_rate, path);
}

AudioBuffer ResampleAudio(const AudioBuffer &buf, int target_rate,
                          const ResampleOptions &opts) {
  if (target_rate <= 0)
    Fail(ErrorCode::kInvalidArgument,
         "target rate must be positive, got " + std::to_string(target_rate));
  if (target_rate == buf.sample_rate) return buf;

  AudioBuffer out;
  out.sample_rate = target_rate;
  out.source_id = buf.source_id;
  const size_t n_in = buf.samples.size();
  const double ratio = static_cast<double>(buf.sample_rate) / target_rate;
  const size_t n_out = static_cast<size_t>(
      std::llround(static_cast<double>(n_in) / ratio));
  out.samples.resize(n_out);
  if (n_in == 0) return out;

  // Cutoff in cycles per input sample.
  const double fc = 0.5 * opts.cutoff * std::min(1.0, 1.0 / ratio);
  const double half_width = opts.zero_crossings / (2.0 * fc);
  const double pi = std::numbers::pi;
  const auto last = static_cast<long>(n_in) - 1;

  for (size_t j = 0; j < n_out; ++j) {
    const double t = j * ratio;
    const long lo = static_cast<long>(std::ceil(t - half_width));
    const long hi = static_cast<long>(std::floor(t + half_width));
    double acc = 0.0, wsum = 0.0;
    for (long i = lo; i <= hi; ++i) {
      const double x = i - t;
      const double arg = 2.0 * fc * x;
      const double sinc = arg == 0.0 ? 1.0 : std::sin(pi * arg) / (pi * arg);
      const double u = x / half_width;  // in [-1, 1]
      const double win = 0.42 + 0.5 * std::cos(pi * u) + 0.08 * std::cos(2 * pi * u);
      const double w = sinc * win;
      acc += w * buf.samples[std::clamp(i, 0L, last)];
      wsum += w;
    }
    out.samples[j] = static_cast<float>(acc / wsum);
  }
  return out;
}

}  // namespace phonacq
