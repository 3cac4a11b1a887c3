// src/inventory/inventory-test.cc

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

#include <algorithm>
#include <set>

#include "doctest.h"
#include "test-util.h"
#include "base/error.h"
#include "base/random.h"

namespace phonacq {

static const std::string kData = PHONACQ_DATA_DIR;

static std::set<std::string> AsSet(const std::vector<std::string> &v) {
  return {v.begin(), v.end()};
}

static const char *kToy =
    "phone,category,status,A,B\n"
    "a,vowel,phoneme,+,-\n"
    "e,vowel,phoneme,-,-\n"
    "o,vowel,allophone,+,0\n"
    "p,consonant,phoneme,-,+\n"
    "b,consonant,phoneme,+,+\n"
    "m,consonant,phoneme,+,−\n"
    "h,consonant,phoneme,0,0\n";

TEST_CASE("load_inventory: English back values") {
  FeatureSystem en = LoadInventory(kData + "/inventory/english.csv");
  CHECK(en.language() == "english");
  const size_t back = en.FeatureIndex("back");
  REQUIRE(en.Find("i") != nullptr);
  REQUIRE(en.Find("u") != nullptr);
  CHECK(en.Find("i")->values[back] == FeatureValue::kMinus);
  CHECK(en.Find("u")->values[back] == FeatureValue::kPlus);
  CHECK(en.Find("i")->category == Category::kVowel);
  CHECK(en.Find("nonexistent") == nullptr);
  CHECK_THROWS_AS(en.FeatureIndex("tone"), Error);
}

TEST_CASE("parse_inventory: empty body, bad cells, duplicates") {
  FeatureSystem e = ParseInventory("phone,category,status,back\n", "x");
  CHECK(e.phones().empty());
  CHECK(e.features() == std::vector<std::string>{"back"});
  CHECK(EnumerateAbxPairs(e).empty());
  try {
    ParseInventory("phone,category,status,back,high\na,vowel,phoneme,+,-\ni,vowel,phoneme,-,?\n", "x");
    FAIL("expected an error");
  } catch (const Error &err) {
    CHECK(err.code() == ErrorCode::kParse);
    const std::string msg = err.what();
    CHECK(msg.find("row 3") != std::string::npos);  // file line, header is row 1
    CHECK(msg.find("column 5") != std::string::npos);
  }
  CHECK_THROWS_AS(ParseInventory("phone,category,status,x\na,vowel,phoneme,+\na,vowel,phoneme,-\n", "x"),
                  Error);
  CHECK_THROWS_AS(ParseInventory("name,category,status,x\n", "x"), Error);
  CHECK_THROWS_AS(ParseInventory("phone,category,status,x\na,glide,phoneme,+\n", "x"), Error);
  TempDir dir;
  CHECK_THROWS_AS(LoadInventory(dir.File("missing.csv")), Error);
}

TEST_CASE("natural_class") {
  FeatureSystem en = LoadInventory(kData + "/inventory/english.csv");
  CHECK(AsSet(NaturalClass(en, {{"voiced", true}, {"nasal", false}, {"continuant", false},
                                {"delayed_release", false}},
                           Category::kConsonant)) == std::set<std::string>{"b", "d", "g"});
  std::vector<std::string> consonants;
  for (const auto &p : en.phones())
    if (p.category == Category::kConsonant) consonants.push_back(p.phone);
  CHECK(NaturalClass(en, {}, Category::kConsonant) == consonants);
  // Every nasal consonant is [+sonorant], so [+nasal, -sonorant] is empty.
  CHECK(NaturalClass(en, {{"nasal", true}, {"sonorant", false}}).empty());
  CHECK_THROWS_AS(NaturalClass(en, {{"tone", true}}), Error);
}

TEST_CASE("natural_class is monotone") {
  FeatureSystem en = LoadInventory(kData + "/inventory/english.csv");
  Rng rng(3);
  const auto &f = en.features();
  for (int trial = 0; trial < 200; ++trial) {
    std::map<std::string, bool> c;
    const int n = static_cast<int>(rng.UniformInt(3));
    for (int i = 0; i < n; ++i) c[f[rng.UniformInt(f.size())]] = rng.UniformInt(2) == 1;
    const auto base = AsSet(NaturalClass(en, c));
    auto more = c;
    more.emplace(f[rng.UniformInt(f.size())], rng.UniformInt(2) == 1);
    for (const auto &p : NaturalClass(en, more)) CHECK(base.count(p) == 1);
  }
}

TEST_CASE("minimal_contrast_pairs: Mandarin voicing is the retroflex fricative pair") {
  FeatureSystem zh = LoadInventory(kData + "/inventory/mandarin.csv");
  auto pairs = MinimalContrastPairs(zh, "voiced");
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].plus == std::vector<std::string>{"ʐ"});
  CHECK(pairs[0].minus == std::vector<std::string>{"ʂ"});
  CHECK(pairs[0].category == Category::kConsonant);
  CHECK(pairs[0].language == "mandarin");
}

TEST_CASE("minimal_contrast_pairs against hand enumeration") {
  FeatureSystem toy = ParseInventory(kToy, "toy");
  auto a = MinimalContrastPairs(toy, "A");
  REQUIRE(a.size() == 2);
  CHECK(a[0].category == Category::kVowel);
  CHECK(AsSet(a[0].plus) == std::set<std::string>{"a", "o"});
  CHECK(AsSet(a[0].minus) == std::set<std::string>{"e"});
  CHECK(AsSet(a[1].plus) == std::set<std::string>{"b", "m"});
  CHECK(AsSet(a[1].minus) == std::set<std::string>{"p"});
  auto b = MinimalContrastPairs(toy, "B");
  // Vowels have no [+B] member, so only the consonant pair remains.
  REQUIRE(b.size() == 1);
  CHECK(AsSet(b[0].plus) == std::set<std::string>{"p", "b"});
  CHECK(AsSet(b[0].minus) == std::set<std::string>{"m"});
  FeatureSystem none = ParseInventory("phone,category,status,Z\na,vowel,phoneme,0\n", "n");
  CHECK(MinimalContrastPairs(none, "Z").empty());
  CHECK(toy.Find("o")->status == PhoneStatus::kAllophone);
}

TEST_CASE("contrast classes partition the specified phones") {
  for (const char *lang : {"english", "mandarin", "synthetic"}) {
    FeatureSystem sys = LoadInventory(kData + "/inventory/" + lang + ".csv");
    for (const auto &feature : sys.features()) {
      const size_t fi = sys.FeatureIndex(feature);
      for (Category cat : {Category::kVowel, Category::kConsonant}) {
        std::set<std::string> specified;
        for (const auto &p : sys.phones())
          if (p.category == cat && p.values[fi] != FeatureValue::kUnspecified) specified.insert(p.phone);
        std::set<std::string> got;
        for (const auto &cp : MinimalContrastPairs(sys, feature)) {
          if (cp.category != cat) continue;
          for (const auto &p : cp.plus) CHECK(got.insert(p).second);
          for (const auto &p : cp.minus) CHECK(got.insert(p).second);
        }
        if (!got.empty()) CHECK(got == specified);
      }
    }
  }
}

TEST_CASE("enumerate_abx_pairs") {
  FeatureSystem toy = ParseInventory(kToy, "toy");
  auto pairs = EnumerateAbxPairs(toy);
  CHECK(pairs.size() == 3 + 6);
  for (const auto &[x, y] : pairs) CHECK(toy.Find(x)->category == toy.Find(y)->category);
  for (const char *lang : {"english", "mandarin", "synthetic"}) {
    FeatureSystem sys = LoadInventory(kData + "/inventory/" + lang + ".csv");
    size_t v = 0, c = 0;
    for (const auto &p : sys.phones()) (p.category == Category::kVowel ? v : c)++;
    CHECK(EnumerateAbxPairs(sys).size() == v * (v - 1) / 2 + c * (c - 1) / 2);
  }
  CHECK(EnumerateAbxPairs(LoadInventory(kData + "/inventory/english.csv")).size() == 885);
  CHECK(EnumerateAbxPairs(LoadInventory(kData + "/inventory/mandarin.csv")).size() == 714);
}

TEST_CASE("token_frequency_report") {
  FeatureSystem sys = ParseInventory(
      "phone,category,status,voiced\n"
      "b,consonant,phoneme,+\n"
      "p,consonant,phoneme,-\n"
      "m,consonant,phoneme,0\n"
      "s,consonant,phoneme,0\n"
      "a,vowel,phoneme,0\n",
      "t");
  CHECK(TokenFrequencyReport({"b", "p", "m", "s"}, sys, "voiced", Category::kConsonant) == 50.0);
  CHECK(TokenFrequencyReport({"b", "b", "a", "s", "zz"}, sys, "voiced", Category::kConsonant) ==
        doctest::Approx(200.0 / 3));
  CHECK_THROWS_AS(TokenFrequencyReport({"b", "p"}, sys, "voiced", Category::kVowel), Error);
}

}  // namespace phonacq
