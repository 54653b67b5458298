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

#ifndef TQKD_ANALYSIS_INFO_BOUNDS_H_
#define TQKD_ANALYSIS_INFO_BOUNDS_H_

#include <optional>
#include <span>
#include <vector>

namespace tqkd::analysis {

// Maximal mean fidelity of estimating an equatorial polarization from n
// identical copies:
//   I(n) = 1/2 + 2^-(n+1) * sum_{l=0}^{n-1} sqrt(C(n,l) C(n,l+1)).
// Exact binomials up to n = 50, log-gamma above. Throws std::invalid_argument
// for negative n.
double FidelityBound(int n);

struct SeriesValue {
  double value = 0.0;
  int n_truncation = 0;  // last photon number included
  double truncation_error_bound = 0.0;
};

// sum_n Poisson(n; lambda) * I(n), truncated once a Chernoff bound on the
// remaining Poisson mass drops below tol. Because I(n) < 1 that mass bounds
// the dropped part of the sum. n_max is capped at ceil(lambda + 20 sqrt(lambda)
// + 50).
SeriesValue PoissonWeightedInfo(double lambda, double tol);

// Upper bound on P(N > n) for N ~ Poisson(lambda).
double PoissonTailBound(double lambda, int n);

struct ChannelParams {
  double mu = 0.0;   // mean photon number leaving Alice
  double eta = 0.5;  // Eve's beam-splitter transmission, (0, 1)
  double t = 1.0;    // Bob's tap transmission, (0, 1]
};

struct InfoBoundResult {
  double i_ab = 0.5;
  double i_ba = 0.5;
  double i_e = 0.5;
  int n_truncation = 0;
  double truncation_error_bound = 0.0;
};

// Eve's information bound under a photon-number-splitting attack:
// I_AB uses the mean (1 - eta) mu, I_BA the mean (1 - eta) eta t mu, and
// I_E = min(I_AB, I_BA). Throws std::invalid_argument on out-of-range params.
InfoBoundResult EveInfo(const ChannelParams& params, double tol);

// mu* = 1 / ((1 - eta) eta t), the launch intensity that returns one photon on
// average to Alice's side of Eve's splitter.
double CriticalMu(double eta, double t);

inline constexpr double kCriticalInfoTolerance = 1e-8;

// I_E at the critical intensity: the Poisson(1)-weighted fidelity series.
double CriticalInfo();

struct RateParams {
  double q = 0.3;       // (1 - c) / N
  double f_rep = 1e6;   // Hz
  double t_link = 1.0;
  double eta_det = 1.0;
};

// q * mu * f_rep * t_link * eta_det, in bits per second.
double RawKeyRate(const RateParams& rate, double mu);

inline double ProtocolFactor(double amode_prob, int n_angles) {
  return (1.0 - amode_prob) / n_angles;
}

struct CurvePoint {
  double mu = 0.0;
  double eta = 0.0;
  double t = 0.0;
  double i_e = 0.0;
  bool is_critical = false;
};

// I_E over mu for each eta in `etas`, eta-major. Each curve also carries its
// mu* point (flagged is_critical) when mu* lies within the mu range, inserted
// in ascending-mu order. `mu_grid` must be nonempty and ascending.
std::vector<CurvePoint> SweepCurve(std::span<const double> mu_grid,
                                   std::span<const double> etas, double t,
                                   double tol);

// Evenly spaced grid [lo, hi] with `points` entries (points >= 2).
std::vector<double> LinearGrid(double lo, double hi, int points);

}  // namespace tqkd::analysis

#endif  // TQKD_ANALYSIS_INFO_BOUNDS_H_
