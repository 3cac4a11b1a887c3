// src/metrics/abx.cc

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

#include "metrics/abx.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>

#include "base/error.h"
#include "base/random.h"
#include "metrics/normalize.h"

namespace phonacq {

double AbxDirectedError(const Eigen::MatrixXd &a, const Eigen::MatrixXd &b) {
  const Eigen::Index na = a.rows(), nb = b.rows();
  if (na < 2 || nb < 1)
    Fail(ErrorCode::kInsufficientData, "ABX needs two A tokens and one B token");
  std::vector<double> da(static_cast<size_t>(na - 1)), db(static_cast<size_t>(nb));
  double score = 0.0;
  for (Eigen::Index x = 0; x < na; ++x) {
    size_t k = 0;
    for (Eigen::Index i = 0; i < na; ++i)
      if (i != x) da[k++] = (a.row(i) - a.row(x)).norm();
    for (Eigen::Index j = 0; j < nb; ++j) db[static_cast<size_t>(j)] = (b.row(j) - a.row(x)).norm();
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    // For each d(x,a): #{b : d(x,b) < d(x,a)} + 0.5 #{b : d(x,b) == d(x,a)}.
    size_t lt = 0, le = 0;
    for (double d : da) {
      while (lt < db.size() && db[lt] < d) ++lt;
      if (le < lt) le = lt;
      while (le < db.size() && db[le] <= d) ++le;
      score += static_cast<double>(lt) + 0.5 * static_cast<double>(le - lt);
    }
  }
  return score / (static_cast<double>(na) * static_cast<double>(na - 1) * static_cast<double>(nb));
}

double AbxError(const Eigen::MatrixXd &a, const Eigen::MatrixXd &b) {
  const bool ab = a.rows() >= 2 && b.rows() >= 1;
  const bool ba = b.rows() >= 2 && a.rows() >= 1;
  if (ab && ba) return 0.5 * (AbxDirectedError(a, b) + AbxDirectedError(b, a));
  if (ab) return AbxDirectedError(a, b);
  if (ba) return AbxDirectedError(b, a);
  Fail(ErrorCode::kInsufficientData, "ABX needs a class with at least two tokens");
}

std::vector<double> AbxReport::Errors() const {
  std::vector<double> e;
  for (const auto &p : pairs) e.push_back(p.error);
  return e;
}

AbxReport AbxAllPairs(const EmbeddingSet &set,
                      const std::vector<std::pair<std::string, std::string>> &pairs,
                      const AbxOptions &opts) {
  AbxReport report;
  if (set.empty()) {
    report.skipped_pairs = pairs.size();
    return report;
  }
  const EmbeddingSet norm = ZscoreNormalize(TrimOutliers(set, opts.trim_fraction));
  report.n_embeddings = norm.size();

  std::map<std::string, std::vector<size_t>> by_label;
  for (size_t i = 0; i < norm.size(); ++i) by_label[norm[i].label].push_back(i);
  std::map<std::string, Eigen::MatrixXd> tokens;
  for (auto &[label, idx] : by_label) {
    if (opts.max_tokens_per_phone > 0 && idx.size() > opts.max_tokens_per_phone) {
      Rng rng(DeriveSeed(opts.seed, "abx-subsample:" + label));
      auto keep = rng.SampleWithoutReplacement(idx.size(), opts.max_tokens_per_phone);
      std::sort(keep.begin(), keep.end());
      std::vector<size_t> sub;
      for (size_t k : keep) sub.push_back(idx[k]);
      idx = std::move(sub);
    }
    Eigen::MatrixXd m(static_cast<Eigen::Index>(idx.size()), norm[0].vector.size());
    for (size_t r = 0; r < idx.size(); ++r)
      m.row(static_cast<Eigen::Index>(r)) = norm[idx[r]].vector.transpose();
    tokens.emplace(label, std::move(m));
  }

  for (const auto &[pa, pb] : pairs) {
    auto ia = tokens.find(pa), ib = tokens.find(pb);
    if (ia == tokens.end() || ib == tokens.end() || ia->second.rows() < 2 ||
        ib->second.rows() < 2) {
      ++report.skipped_pairs;
      continue;
    }
    report.pairs.push_back({pa, pb, AbxError(ia->second, ib->second),
                            static_cast<size_t>(ia->second.rows()),
                            static_cast<size_t>(ib->second.rows())});
  }
  const size_t n = report.pairs.size();
  if (n > 0) {
    double sum = 0.0;
    for (const auto &p : report.pairs) sum += p.error;
    report.mean = sum / n;
    double ss = 0.0;
    for (const auto &p : report.pairs) ss += (p.error - report.mean) * (p.error - report.mean);
    report.sd = n > 1 ? std::sqrt(ss / (n - 1)) : 0.0;
  }
  return report;
}

void WriteAbxCsv(const AbxReport &report, const std::string &path) {
  std::ofstream os(path);
  if (!os) Fail(ErrorCode::kUnwritable, "cannot write " + path);
  os << "phone_a,phone_b,error,n_a,n_b\n";
  char buf[64];
  for (const auto &p : report.pairs) {
    std::snprintf(buf, sizeof(buf), "%.17g", p.error);
    os << p.phone_a << ',' << p.phone_b << ',' << buf << ',' << p.n_a << ',' << p.n_b << '\n';
  }
}

}  // namespace phonacq
