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

#include "tqkd/analysis/info_bounds.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tqkd::analysis {
namespace {

// Largest n whose binomial coefficients are exact integers in a double
// (C(50, 25) ~ 1.3e14 < 2^53, and so is every intermediate product below).
constexpr int kExactBinomialLimit = 50;
constexpr int kFidelityTableSize = 1024;

double FidelityExact(int n) {
  double sum = 0.0;
  double c_l = 1.0;  // C(n, l)
  for (int l = 0; l < n; ++l) {
    const double c_next = c_l * (n - l) / (l + 1);
    sum += std::sqrt(c_l * c_next);
    c_l = c_next;
  }
  return 0.5 + std::ldexp(sum, -(n + 1));
}

double FidelityLogGamma(int n) {
  const double log_n_fact = std::lgamma(n + 1.0);
  const double log_two = std::log(2.0);
  auto log_binom = [&](int k) {
    return log_n_fact - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
  };
  double sum = 0.0;
  double log_c_l = 0.0;
  for (int l = 0; l < n; ++l) {
    const double log_c_next = log_binom(l + 1);
    sum += std::exp(0.5 * (log_c_l + log_c_next) - (n + 1) * log_two);
    log_c_l = log_c_next;
  }
  return 0.5 + sum;
}

double FidelityUncached(int n) {
  return n <= kExactBinomialLimit ? FidelityExact(n) : FidelityLogGamma(n);
}

const std::vector<double>& FidelityTable() {
  static const std::vector<double> table = [] {
    std::vector<double> t(kFidelityTableSize);
    for (int n = 0; n < kFidelityTableSize; ++n) t[n] = FidelityUncached(n);
    return t;
  }();
  return table;
}

double PoissonLogPmf(double lambda, int n) {
  return -lambda + n * std::log(lambda) - std::lgamma(n + 1.0);
}

void CheckOpenUnit(double v, const char* name) {
  if (!(v > 0.0 && v < 1.0)) {
    throw std::invalid_argument(std::string(name) + " must be in (0, 1)");
  }
}

void CheckHalfOpenUnit(double v, const char* name) {
  if (!(v > 0.0 && v <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " must be in (0, 1]");
  }
}

}  // namespace

double FidelityBound(int n) {
  if (n < 0) {
    throw std::invalid_argument("photon number must be nonnegative");
  }
  if (n < kFidelityTableSize) return FidelityTable()[n];
  return FidelityUncached(n);
}

double PoissonTailBound(double lambda, int n) {
  if (lambda <= 0.0) return 0.0;
  const double m = n + 1.0;
  if (m <= lambda) return 1.0;
  // Chernoff: P(N >= m) <= e^-lambda (e lambda / m)^m for m > lambda.
  return std::min(1.0, std::exp(-lambda + m + m * std::log(lambda / m)));
}

SeriesValue PoissonWeightedInfo(double lambda, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (!(lambda >= 0.0)) {
    throw std::invalid_argument("Poisson mean must be nonnegative");
  }
  SeriesValue out;
  if (lambda == 0.0) {
    out.value = FidelityBound(0);
    return out;
  }
  const int cap =
      static_cast<int>(std::ceil(lambda + 20.0 * std::sqrt(lambda) + 50.0));
  double sum = 0.0;
  int n = 0;
  for (;; ++n) {
    sum += std::exp(PoissonLogPmf(lambda, n)) * FidelityBound(n);
    out.truncation_error_bound = PoissonTailBound(lambda, n);
    if (out.truncation_error_bound < tol || n >= cap) break;
  }
  out.value = sum;
  out.n_truncation = n;
  return out;
}

InfoBoundResult EveInfo(const ChannelParams& params, double tol) {
  if (!(params.mu >= 0.0)) {
    throw std::invalid_argument("mu must be nonnegative");
  }
  CheckOpenUnit(params.eta, "eta");
  CheckHalfOpenUnit(params.t, "t");
  const double lambda_ab = (1.0 - params.eta) * params.mu;
  const double lambda_ba = (1.0 - params.eta) * params.eta * params.t * params.mu;
  const SeriesValue ab = PoissonWeightedInfo(lambda_ab, tol);
  const SeriesValue ba = PoissonWeightedInfo(lambda_ba, tol);
  InfoBoundResult out;
  out.i_ab = ab.value;
  out.i_ba = ba.value;
  out.i_e = std::min(ab.value, ba.value);
  out.n_truncation = std::max(ab.n_truncation, ba.n_truncation);
  out.truncation_error_bound =
      std::max(ab.truncation_error_bound, ba.truncation_error_bound);
  return out;
}

double CriticalMu(double eta, double t) {
  CheckOpenUnit(eta, "eta");
  CheckHalfOpenUnit(t, "t");
  return 1.0 / ((1.0 - eta) * eta * t);
}

double CriticalInfo() {
  return PoissonWeightedInfo(1.0, kCriticalInfoTolerance).value;
}

double RawKeyRate(const RateParams& rate, double mu) {
  CheckHalfOpenUnit(rate.q, "q");
  CheckHalfOpenUnit(rate.t_link, "t_link");
  CheckHalfOpenUnit(rate.eta_det, "eta_det");
  if (!(rate.f_rep > 0.0)) throw std::invalid_argument("f_rep must be > 0");
  if (!(mu >= 0.0)) throw std::invalid_argument("mu must be nonnegative");
  return rate.q * mu * rate.f_rep * rate.t_link * rate.eta_det;
}

std::vector<CurvePoint> SweepCurve(std::span<const double> mu_grid,
                                   std::span<const double> etas, double t,
                                   double tol) {
  if (mu_grid.empty()) throw std::invalid_argument("empty mu grid");
  if (!std::is_sorted(mu_grid.begin(), mu_grid.end()) ||
      std::adjacent_find(mu_grid.begin(), mu_grid.end()) != mu_grid.end()) {
    throw std::invalid_argument("mu grid must be strictly ascending");
  }
  std::vector<CurvePoint> points;
  points.reserve(etas.size() * (mu_grid.size() + 1));
  for (const double eta : etas) {
    const double mu_star = CriticalMu(eta, t);
    const bool star_in_range =
        mu_star >= mu_grid.front() && mu_star <= mu_grid.back();
    bool star_placed = !star_in_range;
    auto emit = [&](double mu, bool critical) {
      points.push_back(
          {mu, eta, t, EveInfo({mu, eta, t}, tol).i_e, critical});
    };
    for (const double mu : mu_grid) {
      if (!star_placed && mu_star <= mu) {
        if (mu_star < mu) emit(mu_star, true);
        star_placed = true;
        if (mu_star == mu) {
          emit(mu, true);
          continue;
        }
      }
      emit(mu, false);
    }
  }
  return points;
}

std::vector<double> LinearGrid(double lo, double hi, int points) {
  if (points < 2 || !(hi > lo)) {
    throw std::invalid_argument("grid needs >= 2 points and hi > lo");
  }
  std::vector<double> grid(points);
  const double step = (hi - lo) / (points - 1);
  for (int i = 0; i < points; ++i) grid[i] = lo + step * i;
  grid.back() = hi;
  return grid;
}

}  // namespace tqkd::analysis
