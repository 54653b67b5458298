// Copyright 2026 The tqkd Authors
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

#ifndef TQKD_CORE_RNG_H_
#define TQKD_CORE_RNG_H_

#include <cstdint>
#include <random>

namespace tqkd {

// Seeded random source. The engine is std::mt19937_64, whose output sequence
// is fixed by the standard; every derived distribution below is implemented
// here rather than with <random> distributions so that transcripts are
// reproducible across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextU64() { return engine_(); }

  // Uniform on [0, 1) with 53 bits of resolution.
  double Uniform();
  bool Bernoulli(double p);
  int Bit() { return static_cast<int>(engine_() >> 63); }
  // Uniform on {0, ..., n - 1}; n must be positive.
  std::uint64_t UniformIndex(std::uint64_t n);
  double StandardNormal();

  // Poisson variate: sequential inversion for mean < 30, rounded normal
  // approximation above.
  std::uint64_t Poisson(double mean);

 private:
  std::mt19937_64 engine_;
};

}  // namespace tqkd

#endif  // TQKD_CORE_RNG_H_
