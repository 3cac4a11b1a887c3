// src/base/random.h

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

#ifndef PHONACQ_BASE_RANDOM_H_
#define PHONACQ_BASE_RANDOM_H_

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace phonacq {

// Random stream whose derived distributions are bit-identical across standard
// library implementations.  std::normal_distribution and friends are not, and
// every output of the toolkit has to be a pure function of the seed.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t NextU64() { return engine_(); }
  // Uniform on [0, 1).
  double Uniform();
  // Uniform integer on [0, n).  n must be positive.
  uint64_t UniformInt(uint64_t n);
  double Normal();
  double Normal(double mean, double sd) { return mean + sd * Normal(); }

  // First k entries of a uniformly random permutation of [0, n).
  std::vector<size_t> SampleWithoutReplacement(size_t n, size_t k);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Child seed for a named task.  Tasks with different names get unrelated
// streams, so adding a task never perturbs the others.
uint64_t DeriveSeed(uint64_t master, std::string_view task);
uint64_t DeriveSeed(uint64_t master, uint64_t index);

}  // namespace phonacq

#endif  // PHONACQ_BASE_RANDOM_H_
