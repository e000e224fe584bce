// Copyright 2026 The LAFF Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LAFF_CORE_RNG_H_
#define LAFF_CORE_RNG_H_

#include <cstdint>
#include <random>
#include <span>

namespace laff {

// Independent 64-bit seed for substream `stream` of `seed` (splitmix64).
uint64_t DeriveSeed(uint64_t seed, uint64_t stream);

// Seeded generator with platform-independent sampling helpers.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  // Uniform double in [0, 1) with 53 random bits.
  double Uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool Bernoulli(double p) { return Uniform() < p; }

  // Uniform integer in [0, n).
  int UniformInt(int n) {
    return static_cast<int>(Uniform() * n);
  }

  // Index drawn from `probs` (assumed to sum to one).
  int Sample(std::span<const double> probs);

 private:
  std::mt19937_64 engine_;
};

}  // namespace laff

#endif  // LAFF_CORE_RNG_H_
