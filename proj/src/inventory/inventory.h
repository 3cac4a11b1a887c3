// src/inventory/inventory.h

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

#ifndef PHONACQ_INVENTORY_INVENTORY_H_
#define PHONACQ_INVENTORY_INVENTORY_H_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "metrics/embedding.h"

namespace phonacq {

enum class Category { kVowel, kConsonant };
enum class FeatureValue { kPlus, kMinus, kUnspecified };

const char *CategoryName(Category c);

struct PhoneEntry {
  std::string phone;
  Category category = Category::kConsonant;
  PhoneStatus status = PhoneStatus::kPhoneme;
  std::vector<FeatureValue> values;  // parallel to FeatureSystem::features()
};

/// Distinctive-feature table for one language.  Immutable after loading.
class FeatureSystem {
 public:
  FeatureSystem() = default;
  FeatureSystem(std::string language, std::vector<std::string> features,
                std::vector<PhoneEntry> phones);

  const std::string &language() const { return language_; }
  const std::vector<std::string> &features() const { return features_; }
  const std::vector<PhoneEntry> &phones() const { return phones_; }

  const PhoneEntry *Find(const std::string &phone) const;
  /// Throws kInvalidArgument for an unknown feature name.
  size_t FeatureIndex(const std::string &feature) const;
  bool HasFeature(const std::string &feature) const;

 private:
  std::string language_;
  std::vector<std::string> features_;
  std::vector<PhoneEntry> phones_;
  std::map<std::string, size_t> phone_index_;
};

/// CSV with header `phone,category,status,<feature...>`; feature cells are
/// `+`, `-` (or U+2212) and `0` for unspecified.  The language tag is the
/// file stem.  Errors: kParse with row and column, including duplicate
/// phones and unknown cell values.
FeatureSystem LoadInventory(const std::string &path);
FeatureSystem ParseInventory(const std::string &text, const std::string &language);

/// Phones matching every feature constraint (true = '+', false = '-'),
/// optionally restricted to one category.
std::vector<std::string> NaturalClass(const FeatureSystem &sys,
                                      const std::map<std::string, bool> &constraints,
                                      std::optional<Category> category = std::nullopt);

struct ContrastPair {
  std::vector<std::string> plus;   // [+feature] members
  std::vector<std::string> minus;  // [-feature] members
  std::string feature;
  Category category = Category::kConsonant;
  std::string language;
};

/// For each category with phones on both sides, the [+F] / [-F] partition of
/// the phones specified for F.
std::vector<ContrastPair> MinimalContrastPairs(const FeatureSystem &sys,
                                               const std::string &feature);

/// All unordered within-vowel and within-consonant phone pairs.
std::vector<std::pair<std::string, std::string>> EnumerateAbxPairs(const FeatureSystem &sys);

/// Percentage of tokens of `category` that fall into either class of the
/// feature contrast.  Tokens whose label is not in the inventory are ignored.
/// Throws kInsufficientData when no token of the category exists.
double TokenFrequencyReport(const std::vector<std::string> &token_labels,
                            const FeatureSystem &sys, const std::string &feature,
                            Category category);

}  // namespace phonacq

#endif  // PHONACQ_INVENTORY_INVENTORY_H_
