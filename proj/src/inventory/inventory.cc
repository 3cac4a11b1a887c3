// src/inventory/inventory.cc

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

#include "inventory/inventory.h"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "base/error.h"

namespace phonacq {

const char *CategoryName(Category c) {
  return c == Category::kVowel ? "vowel" : "consonant";
}

FeatureSystem::FeatureSystem(std::string language, std::vector<std::string> features,
                             std::vector<PhoneEntry> phones)
    : language_(std::move(language)),
      features_(std::move(features)),
      phones_(std::move(phones)) {
  for (size_t i = 0; i < phones_.size(); ++i) phone_index_[phones_[i].phone] = i;
}

const PhoneEntry *FeatureSystem::Find(const std::string &phone) const {
  auto it = phone_index_.find(phone);
  return it == phone_index_.end() ? nullptr : &phones_[it->second];
}

bool FeatureSystem::HasFeature(const std::string &feature) const {
  for (const auto &f : features_)
    if (f == feature) return true;
  return false;
}

size_t FeatureSystem::FeatureIndex(const std::string &feature) const {
  for (size_t i = 0; i < features_.size(); ++i)
    if (features_[i] == feature) return i;
  Fail(ErrorCode::kInvalidArgument, "unknown feature '" + feature + "'");
}

namespace {

std::vector<std::string> SplitCsv(const std::string &line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    const size_t b = cell.find_first_not_of(" \t");
    const size_t e = cell.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
  }
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

}  // namespace

FeatureSystem ParseInventory(const std::string &text, const std::string &language) {
  std::istringstream in(text);
  std::string line;
  int row = 0;
  std::vector<std::string> header;
  while (header.empty() && std::getline(in, line)) {
    ++row;
    if (line.find_first_not_of(" \t\r") != std::string::npos) header = SplitCsv(line);
  }
  if (header.empty()) return FeatureSystem(language, {}, {});
  if (header.size() < 3 || header[0] != "phone" || header[1] != "category" ||
      header[2] != "status")
    Fail(ErrorCode::kParse, language + ": header must start with phone,category,status");
  std::vector<std::string> features(header.begin() + 3, header.end());
  std::set<std::string> unique(features.begin(), features.end());
  if (unique.size() != features.size())
    Fail(ErrorCode::kParse, language + ": duplicate feature name in header");

  std::vector<PhoneEntry> phones;
  std::set<std::string> seen;
  while (std::getline(in, line)) {
    ++row;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto cells = SplitCsv(line);
    const std::string where = language + ": row " + std::to_string(row);
    if (cells.size() != header.size())
      Fail(ErrorCode::kParse, where + ": expected " + std::to_string(header.size()) +
                                  " columns, got " + std::to_string(cells.size()));
    PhoneEntry e;
    e.phone = cells[0];
    if (e.phone.empty()) Fail(ErrorCode::kParse, where + ", column 1: empty phone");
    if (!seen.insert(e.phone).second)
      Fail(ErrorCode::kParse, where + ": duplicate phone '" + e.phone + "'");
    if (cells[1] == "vowel") e.category = Category::kVowel;
    else if (cells[1] == "consonant") e.category = Category::kConsonant;
    else Fail(ErrorCode::kParse, where + ", column 2: unknown category '" + cells[1] + "'");
    if (cells[2] == "phoneme") e.status = PhoneStatus::kPhoneme;
    else if (cells[2] == "allophone") e.status = PhoneStatus::kAllophone;
    else Fail(ErrorCode::kParse, where + ", column 3: unknown status '" + cells[2] + "'");
    for (size_t c = 3; c < cells.size(); ++c) {
      const std::string &v = cells[c];
      if (v == "+") e.values.push_back(FeatureValue::kPlus);
      else if (v == "-" || v == "\xE2\x88\x92") e.values.push_back(FeatureValue::kMinus);
      else if (v == "0") e.values.push_back(FeatureValue::kUnspecified);
      else
        Fail(ErrorCode::kParse, where + ", column " + std::to_string(c + 1) +
                                    ": unknown feature value '" + v + "'");
    }
    phones.push_back(std::move(e));
  }
  return FeatureSystem(language, std::move(features), std::move(phones));
}

FeatureSystem LoadInventory(const std::string &path) {
  std::ifstream is(path);
  if (!is) Fail(ErrorCode::kMissingFile, "cannot open " + path);
  std::stringstream ss;
  ss << is.rdbuf();
  return ParseInventory(ss.str(), std::filesystem::path(path).stem().string());
}

std::vector<std::string> NaturalClass(const FeatureSystem &sys,
                                      const std::map<std::string, bool> &constraints,
                                      std::optional<Category> category) {
  std::vector<std::pair<size_t, FeatureValue>> req;
  for (const auto &[name, plus] : constraints)
    req.emplace_back(sys.FeatureIndex(name), plus ? FeatureValue::kPlus : FeatureValue::kMinus);
  std::vector<std::string> out;
  for (const auto &p : sys.phones()) {
    if (category && p.category != *category) continue;
    bool ok = true;
    for (const auto &[idx, want] : req) ok = ok && p.values[idx] == want;
    if (ok) out.push_back(p.phone);
  }
  return out;
}

std::vector<ContrastPair> MinimalContrastPairs(const FeatureSystem &sys,
                                               const std::string &feature) {
  const size_t idx = sys.FeatureIndex(feature);
  std::vector<ContrastPair> out;
  for (Category cat : {Category::kVowel, Category::kConsonant}) {
    ContrastPair cp;
    cp.feature = feature;
    cp.category = cat;
    cp.language = sys.language();
    for (const auto &p : sys.phones()) {
      if (p.category != cat) continue;
      if (p.values[idx] == FeatureValue::kPlus) cp.plus.push_back(p.phone);
      else if (p.values[idx] == FeatureValue::kMinus) cp.minus.push_back(p.phone);
    }
    if (!cp.plus.empty() && !cp.minus.empty()) out.push_back(std::move(cp));
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> EnumerateAbxPairs(const FeatureSystem &sys) {
  std::vector<std::pair<std::string, std::string>> out;
  for (Category cat : {Category::kVowel, Category::kConsonant}) {
    std::vector<std::string> members;
    for (const auto &p : sys.phones())
      if (p.category == cat) members.push_back(p.phone);
    for (size_t i = 0; i < members.size(); ++i)
      for (size_t j = i + 1; j < members.size(); ++j) out.emplace_back(members[i], members[j]);
  }
  return out;
}

double TokenFrequencyReport(const std::vector<std::string> &token_labels,
                            const FeatureSystem &sys, const std::string &feature,
                            Category category) {
  const size_t idx = sys.FeatureIndex(feature);
  size_t in_category = 0, in_contrast = 0;
  for (const auto &label : token_labels) {
    const PhoneEntry *p = sys.Find(label);
    if (!p || p->category != category) continue;
    ++in_category;
    if (p->values[idx] != FeatureValue::kUnspecified) ++in_contrast;
  }
  if (in_category == 0)
    Fail(ErrorCode::kInsufficientData,
         std::string("no ") + CategoryName(category) + " tokens to compute a frequency");
  return 100.0 * static_cast<double>(in_contrast) / static_cast<double>(in_category);
}

}  // namespace phonacq
