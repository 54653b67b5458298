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

#include "tqkd/core/rng.h"

#include <cmath>
#include <limits>

#include "tqkd/core/angle.h"

namespace tqkd {
namespace {

constexpr double kPoissonInversionLimit = 30.0;

}  // namespace

double Rng::Uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

bool Rng::Bernoulli(double p) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  return Uniform() < p;
}

std::uint64_t Rng::UniformIndex(std::uint64_t n) {
  // Rejection sampling keeps the result exactly uniform.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

double Rng::StandardNormal() {
  // Box-Muller; 1 - U keeps the logarithm finite.
  const double u1 = 1.0 - Uniform();
  const double u2 = Uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

std::uint64_t Rng::Poisson(double mean) {
  if (mean <= 0.0) return 0;
  if (mean < kPoissonInversionLimit) {
    const double u = Uniform();
    double p = std::exp(-mean);
    double cdf = p;
    std::uint64_t n = 0;
    while (u >= cdf) {
      ++n;
      p *= mean / static_cast<double>(n);
      cdf += p;
      if (p == 0.0) break;  // cdf has saturated below u through rounding
    }
    return n;
  }
  const double x = std::round(mean + std::sqrt(mean) * StandardNormal());
  return x < 0.0 ? 0 : static_cast<std::uint64_t>(x);
}

}  // namespace tqkd
