// src/corpus/alignment.cc

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

#include "corpus/alignment.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "base/error.h"

namespace phonacq {

Tier TierForLabel(const std::string &label) {
  if (label == kSilenceLabel) return Tier::kSilence;
  if (label == kNoiseLabel) return Tier::kNoise;
  return Tier::kPhone;
}

namespace {

bool ParseDouble(std::string_view s, double *out) {
  const char *end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, *out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

std::vector<AlignedToken> ParseAlignmentText(const std::string &text,
                                             const std::string &origin) {
  std::vector<AlignedToken> tokens;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const std::string where = origin + ":" + std::to_string(lineno);
    const size_t t1 = line.find('\t');
    const size_t t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string::npos)
      Fail(ErrorCode::kParse, where + ": expected start<TAB>end<TAB>label");
    AlignedToken tok;
    std::string_view sv(line);
    if (!ParseDouble(sv.substr(0, t1), &tok.start_s) ||
        !ParseDouble(sv.substr(t1 + 1, t2 - t1 - 1), &tok.end_s))
      Fail(ErrorCode::kParse, where + ": bad time value");
    tok.label = line.substr(t2 + 1);
    if (tok.label.empty() || tok.label.find('\t') != std::string::npos)
      Fail(ErrorCode::kParse, where + ": bad label field");
    if (tok.start_s < 0.0)
      Fail(ErrorCode::kParse, where + ": negative start time");
    if (!(tok.end_s > tok.start_s))
      Fail(ErrorCode::kReversedInterval, where + ": end time not after start time");
    tok.tier = TierForLabel(tok.label);
    tokens.push_back(std::move(tok));
  }
  std::stable_sort(tokens.begin(), tokens.end(),
                   [](const AlignedToken &a, const AlignedToken &b) {
                     return a.start_s < b.start_s;
                   });
  for (size_t i = 1; i < tokens.size(); ++i) {
    if (tokens[i].start_s < tokens[i - 1].end_s)
      Fail(ErrorCode::kOverlappingInterval,
           origin + ": token '" + tokens[i].label + "' at " +
               std::to_string(tokens[i].start_s) + "s overlaps '" +
               tokens[i - 1].label + "'");
  }
  return tokens;
}

std::vector<AlignedToken> ParseAlignment(const std::string &path) {
  std::ifstream is(path);
  if (!is) Fail(ErrorCode::kMissingFile, "cannot open " + path);
  std::stringstream ss;
  ss << is.rdbuf();
  return ParseAlignmentText(ss.str(), path);
}

void WriteAlignment(const std::vector<AlignedToken> &tokens,
                    const std::string &path) {
  std::ofstream os(path);
  if (!os) Fail(ErrorCode::kUnwritable, "cannot write " + path);
  char buf[64];
  for (const auto &t : tokens) {
    std::snprintf(buf, sizeof(buf), "%.6f\t%.6f\t", t.start_s, t.end_s);
    os << buf << t.label << '\n';
  }
  if (!os) Fail(ErrorCode::kUnwritable, "write failed: " + path);
}

}  // namespace phonacq
