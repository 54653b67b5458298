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

// Independent reference computations used only by tests. Nothing here calls
// into the library's numerical code.

#ifndef TQKD_TESTS_ORACLES_H_
#define TQKD_TESTS_ORACLES_H_

#include <cmath>
#include <numbers>

namespace tqkd::testing {

// C(n, k) by the multiplicative formula in long double.
inline long double Binomial(int n, int k) {
  long double c = 1.0L;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

inline long double FidelityOracle(int n) {
  long double sum = 0.0L;
  for (int l = 0; l < n; ++l) {
    sum += std::sqrt(Binomial(n, l) * Binomial(n, l + 1));
  }
  return 0.5L + sum / std::pow(2.0L, n + 1);
}

// Plain partial sum of Poisson(lambda) * I(n) through n = terms - 1.
inline long double PoissonInfoOracle(long double lambda, int terms) {
  long double p = std::exp(-lambda);
  long double sum = 0.0L;
  for (int n = 0; n < terms; ++n) {
    if (n > 0) p *= lambda / n;
    sum += p * FidelityOracle(n);
  }
  return sum;
}

// Probability that a photon polarized at `pol` clicks the D0 detector of a
// PBS at pi/4.
inline double MalusD0(double pol) {
  const double c = std::cos(pol - std::numbers::pi / 4.0);
  return c * c;
}

// Sifted QBER under impersonation in the noiseless single-photon model, by
// enumerating k, Bob's index b (matched rounds make it uniform), Eve's guess
// g, Eve's decoded bit and Alice's outcome.
inline double ImpersonationQberOracle(int n_angles) {
  const double pi = std::numbers::pi;
  const double step = pi / (n_angles + 1);
  double error = 0.0;
  double weight = 0.0;
  for (int k = 0; k <= 1; ++k) {
    const double enc = (k == 0 ? 1.0 : -1.0) * pi / 4.0;
    for (int b = 1; b <= n_angles; ++b) {
      const int a = n_angles + 1 - b;
      for (int g = 1; g <= n_angles; ++g) {
        const double w = 1.0 / (2.0 * n_angles * n_angles);
        // Eve sees enc + alpha_b, rotates by -alpha_g.
        const double p_eve0 = MalusD0(enc + b * step - g * step);
        for (int ke = 0; ke <= 1; ++ke) {
          const double p_ke = ke == 0 ? p_eve0 : 1.0 - p_eve0;
          const double enc_e = (ke == 0 ? 1.0 : -1.0) * pi / 4.0;
          // Alice's final polarization enc_e + alpha_a + alpha_g.
          const double p_alice0 = MalusD0(enc_e + a * step + g * step);
          for (int oa = 0; oa <= 1; ++oa) {
            const double p_oa = oa == 0 ? p_alice0 : 1.0 - p_alice0;
            weight += w * p_ke * p_oa;
            if (oa != k) error += w * p_ke * p_oa;
          }
        }
      }
    }
  }
  return error / weight;
}

}  // namespace tqkd::testing

#endif  // TQKD_TESTS_ORACLES_H_
