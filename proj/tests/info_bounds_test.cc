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

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"
#include "tqkd/core/rng.h"

namespace tqkd::analysis {
namespace {

using ::tqkd::testing::FidelityOracle;
using ::tqkd::testing::PoissonInfoOracle;

// 40-digit mpmath evaluations of the same sums, frozen.
constexpr double kInfoAtOne = 0.690025560586006;
constexpr double kInfoAtFive = 0.927223755917504;
constexpr double kInfoAtTen = 0.971391059781523;
constexpr double kFidelityAt1000 = 0.999750062280853;

TEST(FidelityBoundTest, SmallN) {
  EXPECT_EQ(FidelityBound(0), 0.5);
  EXPECT_EQ(FidelityBound(1), 0.75);
  EXPECT_NEAR(FidelityBound(2), 0.5 + std::sqrt(2.0) / 4.0, 1e-12);
  EXPECT_THROW(FidelityBound(-1), std::invalid_argument);
}

TEST(FidelityBoundTest, MatchesOracleAcrossExactAndLogGammaPaths) {
  for (int n = 0; n <= 200; ++n) {
    EXPECT_NEAR(FidelityBound(n), static_cast<double>(FidelityOracle(n)),
                1e-13)
        << n;
  }
  EXPECT_NEAR(FidelityBound(1000), kFidelityAt1000, 1e-12);
  EXPECT_NEAR(FidelityBound(5000), FidelityBound(4999), 1e-6);
}

TEST(FidelityBoundTest, StrictlyIncreasingBelowOne) {
  double prev = FidelityBound(0);
  for (int n = 1; n <= 1000; ++n) {
    const double cur = FidelityBound(n);
    ASSERT_GT(cur, prev) << n;
    ASSERT_LT(cur, 1.0) << n;
    prev = cur;
  }
  EXPECT_GT(prev, 0.9997);
}

TEST(PoissonWeightedInfoTest, Examples) {
  EXPECT_EQ(PoissonWeightedInfo(0.0, 1e-8).value, 0.5);
  const double at_one = PoissonWeightedInfo(1.0, 1e-10).value;
  EXPECT_NEAR(at_one, 0.6901, 1e-4);
  EXPECT_NEAR(at_one, kInfoAtOne, 1e-9);
  EXPECT_NEAR(at_one, static_cast<double>(PoissonInfoOracle(1.0L, 40)), 1e-9);
  EXPECT_NEAR(PoissonWeightedInfo(5.0, 1e-10).value, kInfoAtFive, 1e-9);
  EXPECT_NEAR(PoissonWeightedInfo(10.0, 1e-10).value, kInfoAtTen, 1e-9);
  EXPECT_GT(PoissonWeightedInfo(10.0, 1e-8).value,
            PoissonWeightedInfo(5.0, 1e-8).value);
  EXPECT_THROW(PoissonWeightedInfo(1.0, 0.0), std::invalid_argument);
}

TEST(PoissonWeightedInfoTest, MonotoneAndBracketed) {
  double prev = 0.5;
  for (double lambda = 0.0; lambda <= 40.0; lambda += 0.05) {
    const double v = PoissonWeightedInfo(lambda, 1e-12).value;
    EXPECT_GE(v, prev - 1e-12) << lambda;
    EXPECT_GE(v, 0.5);
    EXPECT_LT(v, 1.0);
    prev = v;
  }
}

TEST(PoissonWeightedInfoTest, TruncationBoundIsHonest) {
  Rng rng(21);
  for (int i = 0; i < 50; ++i) {
    const double lambda = rng.Uniform() * 30.0;
    const double tol = std::pow(10.0, -3.0 - 7.0 * rng.Uniform());
    const SeriesValue v = PoissonWeightedInfo(lambda, tol);
    EXPECT_LT(v.truncation_error_bound, tol);
    const long double longer =
        PoissonInfoOracle(static_cast<long double>(lambda), v.n_truncation + 51);
    EXPECT_GE(v.truncation_error_bound + 1e-13,
              std::fabs(static_cast<double>(longer) - v.value))
        << "lambda=" << lambda;
  }
}

TEST(EveInfoTest, Examples) {
  EXPECT_EQ(EveInfo({0.0, 0.5, 0.7}, 1e-8).i_e, 0.5);
  const InfoBoundResult r = EveInfo({5.7142857, 0.5, 0.7}, 1e-10);
  EXPECT_NEAR(r.i_ba, 0.6901, 1e-4);
  EXPECT_EQ(r.i_e, r.i_ba);
  EXPECT_THROW(EveInfo({1.0, 1.0, 0.7}, 1e-8), std::invalid_argument);
  EXPECT_THROW(EveInfo({1.0, 0.5, 0.0}, 1e-8), std::invalid_argument);
}

TEST(EveInfoTest, BobToAliceNeverExceedsAliceToBob) {
  Rng rng(22);
  for (int i = 0; i < 2000; ++i) {
    const ChannelParams p{rng.Uniform() * 30.0, 0.01 + 0.98 * rng.Uniform(),
                          0.01 + 0.99 * rng.Uniform()};
    const InfoBoundResult r = EveInfo(p, 1e-10);
    ASSERT_LE(r.i_ba, r.i_ab);
    ASSERT_EQ(r.i_e, r.i_ba);
  }
}

TEST(EveInfoTest, CriticalIntensityGivesSameBound) {
  Rng rng(23);
  const double reference = CriticalInfo();
  for (int i = 0; i < 100; ++i) {
    const double eta = 0.01 + 0.98 * rng.Uniform();
    const double t = 0.01 + 0.99 * rng.Uniform();
    EXPECT_NEAR(EveInfo({CriticalMu(eta, t), eta, t}, 1e-8).i_e, reference,
                1e-8);
  }
}

TEST(CriticalMuTest, Examples) {
  EXPECT_NEAR(CriticalMu(0.5, 0.7), 5.7142857, 1e-6);
  EXPECT_DOUBLE_EQ(CriticalMu(0.5, 1.0), 4.0);
  for (double t : {0.1, 0.5, 0.7, 1.0}) {
    EXPECT_NEAR(CriticalMu(0.3, t), CriticalMu(0.7, t), 1e-12);
  }
  EXPECT_THROW(CriticalMu(0.0, 0.7), std::invalid_argument);
  EXPECT_THROW(CriticalMu(1.0, 0.7), std::invalid_argument);
}

TEST(CriticalMuTest, MinimizedAtHalf) {
  for (double t : {0.2, 0.7, 0.9, 1.0}) {
    const double at_half = CriticalMu(0.5, t);
    for (int i = 1; i < 1000; ++i) {
      ASSERT_GE(CriticalMu(i / 1000.0, t), at_half);
    }
  }
}

TEST(CriticalInfoTest, Value) {
  const double v = CriticalInfo();
  EXPECT_NEAR(v, 0.6900, 5e-4);
  EXPECT_NEAR(v, static_cast<double>(PoissonInfoOracle(1.0L, 40)), 1e-6);
  EXPECT_GE(1.0 - v, 0.305);
  EXPECT_LE(1.0 - v, 0.315);
}

TEST(RawKeyRateTest, Examples) {
  const RateParams rate{ProtocolFactor(0.1, 3), 1e6, 0.25, 0.1};
  EXPECT_NEAR(RawKeyRate(rate, 6.0), 45000.0, 1e-6);
  EXPECT_EQ(RawKeyRate(rate, 0.0), 0.0);
  RateParams doubled = rate;
  doubled.f_rep *= 2.0;
  EXPECT_NEAR(RawKeyRate(doubled, 6.0), 2.0 * RawKeyRate(rate, 6.0), 1e-6);
  EXPECT_NEAR(RawKeyRate(rate, 12.0), 2.0 * RawKeyRate(rate, 6.0), 1e-6);
}

TEST(SweepCurveTest, ShapeAndCriticalPoint) {
  const std::vector<double> grid = LinearGrid(0.0, 20.0, 201);
  const std::vector<double> etas = {0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8};
  const auto points = SweepCurve(grid, etas, 0.7, 1e-8);
  EXPECT_EQ(points.size(), etas.size() * (grid.size() + 1));
  for (const double eta : etas) {
    double prev = 0.0;
    bool first = true;
    int critical = 0;
    for (const auto& p : points) {
      if (p.eta != eta) continue;
      if (first) EXPECT_EQ(p.i_e, 0.5);
      first = false;
      EXPECT_GE(p.i_e, prev);
      prev = p.i_e;
      if (p.is_critical) {
        ++critical;
        EXPECT_NEAR(p.i_e, 0.6900, 5e-4);
        EXPECT_GE(p.mu, 5.71);
        EXPECT_LE(p.mu, 8.93);
      }
    }
    EXPECT_EQ(critical, 1) << eta;
  }
  const std::vector<double> bad = {1.0, 0.5};
  EXPECT_THROW(SweepCurve(bad, etas, 0.7, 1e-8), std::invalid_argument);
}

}  // namespace
}  // namespace tqkd::analysis
