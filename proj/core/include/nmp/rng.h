// Copyright 2026 The NMP Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NMP_RNG_H_
#define NMP_RNG_H_

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace nmp {

// Recorded in the header of every generated file and CSV so a run can be
// replayed by any implementation of the same two primitives: the standard
// 64-bit Mersenne Twister (bit-exact by definition) and the SplitMix64
// finalizer used for stream derivation.
inline constexpr std::string_view kRngAlgorithm = "mt19937_64+splitmix64/v1";

// SplitMix64 output function.
uint64_t Mix64(uint64_t x);

// Seed for the `index`-th independent stream under `master`.
uint64_t DeriveSeed(uint64_t master, uint64_t index);

// Deterministic generator. Only the engine's raw 64-bit outputs are used; all
// conversions below are implemented here rather than through <random>
// distributions, whose output is implementation-defined.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t Next() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double Uniform01() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound); bound must be positive.
  uint64_t UniformBelow(uint64_t bound);

  // Uniform in [lo, hi], inclusive.
  int64_t UniformInt(int64_t lo, int64_t hi);

  bool Bernoulli(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return Uniform01() < p;
  }

  // `count` distinct values from [0, population), in draw order (prefix of a
  // Fisher-Yates shuffle).
  std::vector<int> SampleWithoutReplacement(int population, int count);

  template <typename T>
  void Shuffle(std::vector<T>& values) {
    for (size_t i = values.size(); i > 1; --i) {
      size_t j = UniformBelow(i);
      std::swap(values[i - 1], values[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace nmp

#endif  // NMP_RNG_H_
