// src/metrics/embedding.cc

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

#include "metrics/embedding.h"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "base/error.h"

namespace phonacq {

Eigen::MatrixXd ToMatrix(const EmbeddingSet &set) {
  const Eigen::Index d = set.empty() ? 0 : set[0].vector.size();
  Eigen::MatrixXd m(static_cast<Eigen::Index>(set.size()), d);
  for (size_t i = 0; i < set.size(); ++i)
    m.row(static_cast<Eigen::Index>(i)) = set[i].vector.transpose();
  return m;
}

std::vector<std::string> Labels(const EmbeddingSet &set) {
  std::vector<std::string> out;
  out.reserve(set.size());
  for (const auto &e : set) out.push_back(e.label);
  return out;
}

EmbeddingSet WithLabel(const EmbeddingSet &set, const std::string &label) {
  EmbeddingSet out;
  for (const auto &e : set)
    if (e.label == label) out.push_back(e);
  return out;
}

const char *PhoneStatusName(PhoneStatus s) {
  return s == PhoneStatus::kAllophone ? "allophone" : "phoneme";
}

void WriteEmbeddingsCsv(const EmbeddingSet &set, const std::string &path) {
  std::FILE *f = std::fopen(path.c_str(), "w");
  if (!f) Fail(ErrorCode::kUnwritable, "cannot write " + path);
  const Eigen::Index d = set.empty() ? 0 : set[0].vector.size();
  std::fprintf(f, "label,status");
  for (Eigen::Index i = 0; i < d; ++i) std::fprintf(f, ",d%ld", static_cast<long>(i));
  std::fprintf(f, "\n");
  for (const auto &e : set) {
    if (e.vector.size() != d) {
      std::fclose(f);
      Fail(ErrorCode::kDimensionMismatch, "embeddings of mixed dimension");
    }
    std::fprintf(f, "%s,%s", e.label.c_str(), PhoneStatusName(e.status));
    for (Eigen::Index i = 0; i < d; ++i) std::fprintf(f, ",%.17g", e.vector(i));
    std::fprintf(f, "\n");
  }
  if (std::fclose(f) != 0) Fail(ErrorCode::kUnwritable, "write failed: " + path);
}

EmbeddingSet ReadEmbeddingsCsv(const std::string &path) {
  std::ifstream is(path);
  if (!is) Fail(ErrorCode::kMissingFile, "cannot open " + path);
  std::string line;
  if (!std::getline(is, line) || line.rfind("label,status", 0) != 0)
    Fail(ErrorCode::kMalformedHeader, path + ": expected label,status,d0,... header");
  size_t dims = 0;
  for (char c : line) dims += c == ',';
  dims -= 1;
  EmbeddingSet out;
  int row = 1;
  while (std::getline(is, line)) {
    ++row;
    if (line.empty() || line == "\r") continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    const std::string where = path + ":" + std::to_string(row);
    if (cells.size() != dims + 2) Fail(ErrorCode::kParse, where + ": wrong column count");
    LabeledEmbedding e;
    e.label = cells[0];
    if (cells[1] == "allophone") e.status = PhoneStatus::kAllophone;
    else if (cells[1] != "phoneme") Fail(ErrorCode::kParse, where + ": bad status " + cells[1]);
    e.vector.resize(static_cast<Eigen::Index>(dims));
    for (size_t i = 0; i < dims; ++i) {
      const std::string &c = cells[i + 2];
      double v = 0.0;
      auto r = std::from_chars(c.data(), c.data() + c.size(), v);
      if (r.ec != std::errc() || r.ptr != c.data() + c.size())
        Fail(ErrorCode::kParse, where + ": bad number '" + c + "'");
      e.vector(static_cast<Eigen::Index>(i)) = v;
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace phonacq
