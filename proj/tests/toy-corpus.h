// tests/toy-corpus.h

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

#ifndef PHONACQ_TESTS_TOY_CORPUS_H_
#define PHONACQ_TESTS_TOY_CORPUS_H_

#include <fstream>
#include <string>

#include "corpus/synth.h"

namespace phonacq {

// Small three-vowel, two-consonant language rendered into `dir`.  Writes
// dir/manifest.json and dir/inventory.csv.
inline void MakeToyLanguage(const std::string &dir, const std::string &language,
                            double base_hz, int n_utterances, uint64_t seed) {
  SynthSpec s;
  s.language = language;
  s.n_utterances = n_utterances;
  s.tokens_per_utterance = 8;
  s.seed = seed;
  s.n_speakers = 4;
  s.split_speakers = {2, 1, 1};
  s.classes = {{"a", {base_hz, 3 * base_hz}, 0.0, 0.09, 0.01},
               {"i", {base_hz * 0.6, 5 * base_hz}, 0.0, 0.09, 0.01},
               {"u", {base_hz * 0.7, 1.8 * base_hz}, 0.0, 0.09, 0.01},
               {"s", {5000}, 0.8, 0.09, 0.01},
               {"m", {base_hz * 0.3}, 0.1, 0.09, 0.01}};
  DatasetManifest m = SynthesizeCorpus(s, dir);
  WriteManifest(m, dir + "/manifest.json");
  std::ofstream inv(dir + "/inventory.csv");
  inv << "phone,category,status,back,high,voiced,nasal\n"
         "a,vowel,phoneme,+,-,0,0\n"
         "i,vowel,phoneme,-,+,0,0\n"
         "u,vowel,phoneme,+,+,0,0\n"
         "s,consonant,phoneme,0,0,-,-\n"
         "m,consonant,phoneme,0,0,+,+\n";
}

}  // namespace phonacq

#endif  // PHONACQ_TESTS_TOY_CORPUS_H_
