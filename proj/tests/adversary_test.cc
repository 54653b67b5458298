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

#include "tqkd/adversary/adversary.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"
#include "tqkd/protocol/protocol.h"

namespace tqkd {
namespace {

using ::tqkd::testing::ImpersonationQberOracle;

constexpr double kEps = 1e-12;

SessionConfig Ideal(int n, double c) {
  SessionConfig cfg;
  cfg.n_angles = n;
  cfg.amode_prob = c;
  cfg.photon_mode = PhotonMode::kIdealSinglePhoton;
  return cfg;
}

TEST(AttackModelTest, Validation) {
  EXPECT_NO_THROW(AttackModel::Pns(0.3).Validate());
  EXPECT_THROW(AttackModel::Pns(0.0).Validate(), ConfigError);
  EXPECT_THROW(AttackModel::Pns(1.0).Validate(), ConfigError);
  try {
    AttackModel::Pns(1.5).Validate();
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.key(), "eta");
  }
  EXPECT_EQ(ParseAttackKind("trojan"), AttackKind::kTrojanHorse);
  EXPECT_THROW(ParseAttackKind("mitm"), ConfigError);
}

TEST(PnsTest, SymmetricSplit) {
  EveState eve;
  const CoherentPulse onward = PnsIntercept(CoherentPulse{Angle(0.4), 6.0}, 0.5,
                                            Direction::kAliceToBob, eve);
  EXPECT_EQ(onward.mean_photons, 3.0);
  ASSERT_EQ(eve.reflected_pulses.size(), 1u);
  EXPECT_EQ(eve.reflected_pulses[0].mean_photons, 3.0);
  EXPECT_EQ(eve.reflected_pulses[0].polarization, Angle(0.4));
}

TEST(PnsTest, FullTransmissionLeavesNothing) {
  EveState eve;
  const CoherentPulse in{Angle(1.0), 6.0};
  const CoherentPulse onward =
      PnsIntercept(in, 1.0, Direction::kBobToAlice, eve);
  EXPECT_EQ(onward.mean_photons, in.mean_photons);
  EXPECT_EQ(onward.polarization, in.polarization);
  EXPECT_EQ(eve.reflected_pulses.at(0).mean_photons, 0.0);
}

TEST(PnsTest, BothLegsInsideASession) {
  Rng rng(1);
  SessionConfig cfg;
  cfg.mean_photons = 6.0;
  cfg.bob_tap_transmission = 0.7;
  const double eta = 0.4;
  EveState eve;
  const CoherentPulse sent = AlicePrepare(Angle(0.2), 1, 0, cfg);
  const CoherentPulse at_bob =
      PnsIntercept(sent, eta, Direction::kAliceToBob, eve);
  const BobOutput bob = BobEncode(at_bob, 1, 2, cfg, rng);
  const CoherentPulse at_alice =
      PnsIntercept(bob.onward, eta, Direction::kBobToAlice, eve);
  ASSERT_EQ(eve.reflected_pulses.size(), 2u);
  EXPECT_NEAR(eve.reflected_pulses[0].mean_photons, (1 - eta) * 6.0, kEps);
  EXPECT_NEAR(eve.reflected_pulses[1].mean_photons, (1 - eta) * eta * 0.7 * 6.0,
              kEps);
  // Eve's harvest is exactly the deficit against a lossless channel.
  EXPECT_NEAR(sent.mean_photons - at_bob.mean_photons,
              eve.reflected_pulses[0].mean_photons, kEps);
  EXPECT_NEAR(bob.onward.mean_photons - at_alice.mean_photons,
              eve.reflected_pulses[1].mean_photons, kEps);
}

TEST(PnsTest, SessionTotalsPerRound) {
  SessionConfig cfg;
  cfg.mean_photons = 8.0;
  cfg.bob_tap_transmission = 0.9;
  cfg.target_key_bits = 200;
  const Transcript tr = RunSession(cfg, AttackModel::Pns(0.3));
  const double rounds = static_cast<double>(tr.rounds.size());
  EXPECT_NEAR(tr.eve.pns_stored_mean_ab / rounds, 0.7 * 8.0, 1e-9);
  EXPECT_NEAR(tr.eve.pns_stored_mean_ba / rounds, 0.7 * 0.3 * 0.9 * 8.0, 1e-9);
  EXPECT_EQ(tr.verdict, Verdict::kAccepted);
}

TEST(HonestTest, TransparentToPulses) {
  // An honest session never touches Eve's bookkeeping.
  SessionConfig cfg;
  cfg.target_key_bits = 100;
  const Transcript tr = RunSession(cfg, AttackModel::Honest());
  EXPECT_EQ(tr.eve, EveSummary{});
  EXPECT_EQ(tr.verdict, Verdict::kAccepted);
}

TEST(ImpersonationTest, ForwardStoresOriginalAndSendsFake) {
  Rng rng(2);
  const ScreeningSet screening(3);
  EveState eve;
  const CoherentPulse original{Angle(0.77), 5.0};
  const CoherentPulse fake =
      ImpersonateForward(original, screening, 6.0, eve, rng);
  ASSERT_TRUE(eve.stored_pulse_e1.has_value());
  EXPECT_EQ(eve.stored_pulse_e1->polarization, original.polarization);
  EXPECT_EQ(eve.stored_pulse_e1->mean_photons, original.mean_photons);
  EXPECT_EQ(fake.wavelength, Wavelength::kProtocol);
  EXPECT_EQ(fake.mean_photons, 6.0);
  ASSERT_TRUE(eve.fake.has_value());
  Angle expected = eve.fake->theta;
  if (eve.fake->s == 0) expected += screening.angle(eve.fake->alpha_a_index);
  EXPECT_EQ(fake.polarization, expected);
}

TEST(ImpersonationTest, FakePolarizationIsUniform) {
  Rng rng(3);
  const ScreeningSet screening(3);
  constexpr int kRuns = 100000;
  std::vector<double> u;
  u.reserve(kRuns);
  for (int i = 0; i < kRuns; ++i) {
    EveState eve;
    u.push_back(ImpersonateForward(CoherentPulse{}, screening, 1.0, eve, rng)
                    .polarization.radians() /
                kPi);
  }
  std::sort(u.begin(), u.end());
  double d = 0.0;
  for (int i = 0; i < kRuns; ++i) {
    d = std::max({d, std::fabs(u[i] - static_cast<double>(i) / kRuns),
                  std::fabs(u[i] - static_cast<double>(i + 1) / kRuns)});
  }
  // Kolmogorov-Smirnov critical value at alpha = 0.001.
  EXPECT_LT(d, 1.95 / std::sqrt(static_cast<double>(kRuns)));
}

// One impersonated round through Bob; returns (guess correct, k' == k).
std::pair<bool, bool> DecodeOnce(int n, Rng& rng) {
  const SessionConfig cfg = Ideal(n, 0.0);
  const ScreeningSet screening(n);
  EveState eve;
  const CoherentPulse fake =
      ImpersonateForward(CoherentPulse{Angle(0.3), 1.0}, screening, 1.0, eve,
                         rng);
  const int k = rng.Bit();
  const int b = 1 + static_cast<int>(rng.UniformIndex(n));
  const BobOutput bob = BobEncode(fake, k, b, cfg, rng);
  const int k_eve =
      ImpersonateDecode(bob.onward, screening, cfg.photon_mode, eve, rng);
  return {*eve.guess_alpha_b_index == b, k_eve == k};
}

TEST(ImpersonationTest, DecodeProbabilities) {
  Rng rng(4);
  constexpr int kTrials = 200000;
  int right_guess = 0, right_guess_right_bit = 0, wrong_guess = 0,
      wrong_guess_right_bit = 0;
  for (int i = 0; i < kTrials; ++i) {
    const auto [guess_ok, bit_ok] = DecodeOnce(2, rng);
    if (guess_ok) {
      ++right_guess;
      right_guess_right_bit += bit_ok;
    } else {
      ++wrong_guess;
      wrong_guess_right_bit += bit_ok;
    }
  }
  EXPECT_EQ(right_guess_right_bit, right_guess);
  EXPECT_NEAR(static_cast<double>(right_guess) / kTrials, 0.5, 0.01);
  EXPECT_NEAR(static_cast<double>(wrong_guess_right_bit) / wrong_guess, 0.25,
              0.01);
  EXPECT_NEAR(
      static_cast<double>(right_guess_right_bit + wrong_guess_right_bit) /
          kTrials,
      0.625, 0.01);
}

TEST(ImpersonationTest, ReencodeWithCorrectGuessIsExact) {
  Rng rng(5);
  const int n = 3;
  const SessionConfig cfg = Ideal(n, 0.0);
  const ScreeningSet screening(n);
  int checked = 0;
  while (checked < 2000) {
    EveState eve;
    const Angle theta(rng.Uniform() * kPi);
    const int s = rng.Bit();
    const int a = 1 + static_cast<int>(rng.UniformIndex(n));
    const int b = n + 1 - a;
    const int k = rng.Bit();
    const CoherentPulse fake = ImpersonateForward(
        AlicePrepare(theta, a, s, cfg), screening, 1.0, eve, rng);
    const BobOutput bob = BobEncode(fake, k, b, cfg, rng);
    ImpersonateDecode(bob.onward, screening, cfg.photon_mode, eve, rng);
    if (*eve.guess_alpha_b_index != b) continue;
    ASSERT_EQ(*eve.decoded_bit, k);
    const MeasurementOutcome o = AliceCompensateMeasure(
        ImpersonateReencode(screening, eve), theta, s, a, cfg, rng);
    ASSERT_EQ(o.bit(), k);
    ++checked;
  }
}

TEST(ImpersonationTest, OracleValues) {
  EXPECT_NEAR(ImpersonationQberOracle(2), 0.1875, 1e-12);
  // At N = 2 the oracle sits exactly on (N-1)/N * 3/8.
  EXPECT_NEAR(ImpersonationQberOracle(2), 0.5 * 3.0 / 8.0, 1e-12);
}

TEST(ImpersonationTest, SiftedQberMatchesEnumeration) {
  for (int n : {2, 3, 5}) {
    SessionConfig cfg = Ideal(n, 0.0);
    cfg.target_key_bits = 40000;
    cfg.seed = 100 + n;
    const Transcript tr = RunSession(cfg, AttackModel::Impersonation());
    const TranscriptStats s = Summarize(tr);
    const double oracle = ImpersonationQberOracle(n);
    EXPECT_NEAR(s.qber, oracle,
                4.0 * std::sqrt(oracle * (1 - oracle) / s.sifted_bits))
        << "N=" << n;
    EXPECT_EQ(tr.verdict, Verdict::kHashMismatch);
    EXPECT_EQ(tr.eve.decoded_bits, s.sifted_bits);
  }
}

TEST(ImpersonationTest, HashPassDecaysGeometrically) {
  for (std::uint64_t bits : {4u, 8u}) {
    SessionConfig cfg = Ideal(2, 0.0);
    cfg.target_key_bits = bits;
    constexpr int kSessions = 4000;
    int passed = 0;
    for (int i = 0; i < kSessions; ++i) {
      cfg.seed = 7000 + i;
      if (RunSession(cfg, AttackModel::Impersonation()).verdict ==
          Verdict::kAccepted) {
        ++passed;
      }
    }
    EXPECT_NEAR(static_cast<double>(passed) / kSessions,
                std::pow(1.0 - 0.1875, static_cast<double>(bits)), 0.03)
        << bits;
  }
}

TEST(ImpersonationTest, AuthenticationRoundsExposeFakeQubits) {
  // Under impersonation a verifiable round fails with probability 1/2, so
  // sessions last two verifiable rounds on average.
  SessionConfig cfg = Ideal(2, 1.0);
  cfg.max_rounds = 100000;
  constexpr int kSessions = 4000;
  double verifiable = 0.0;
  for (int i = 0; i < kSessions; ++i) {
    cfg.seed = 9000 + i;
    const Transcript tr = RunSession(cfg, AttackModel::Impersonation());
    ASSERT_EQ(tr.verdict, Verdict::kAuthFailure);
    ASSERT_EQ(tr.eve.exposed_rounds, 1u);
    for (const RoundRecord& r : tr.rounds) verifiable += r.integrity_ok.has_value();
  }
  EXPECT_NEAR(verifiable / kSessions, 2.0, 0.1);
}

TEST(TrojanTest, AncillaCarriesBobsEncoding) {
  Rng rng(6);
  SessionConfig cfg = Ideal(3, 0.0);
  cfg.bob_tap_transmission = 1.0;
  EveState eve;
  for (int k = 0; k <= 1; ++k) {
    for (int b = 1; b <= 3; ++b) {
      const TrojanTransmission tx =
          TrojanAttach(CoherentPulse{Angle(0.9), 1.0}, 1, eve);
      EXPECT_EQ(tx.ancilla.polarization, Angle(0.0));
      EXPECT_EQ(tx.ancilla.wavelength, Wavelength::kForeign);
      const BobOutput bob = BobEncode(tx.signal, k, b, cfg, rng, tx.ancilla);
      ASSERT_TRUE(bob.ancilla_onward.has_value());
      EXPECT_EQ(bob.ancilla_onward->wavelength, Wavelength::kForeign);
      EXPECT_EQ(bob.ancilla_onward->count, 1u);
      const Angle expected =
          Angle(k == 0 ? kPi / 4 : -kPi / 4) + ScreeningAngle(b, 3);
      EXPECT_LT(Angle::Distance(bob.ancilla_onward->polarization, expected),
                kEps);
      EXPECT_EQ(TrojanExtract(*bob.ancilla_onward, b, ScreeningSet(3), eve, rng),
                k);
      EXPECT_TRUE(eve.stored_ancilla_e2.has_value());
    }
  }
}

TEST(TrojanTest, AbsorbedAncillaYieldsNothing) {
  Rng rng(7);
  EveState eve;
  EXPECT_FALSE(TrojanExtract(PhotonBatch{0, Angle(0.0), Wavelength::kForeign},
                             1, ScreeningSet(2), eve, rng)
                   .has_value());
}

TEST(TrojanTest, InvisibleWithoutAuthenticationRounds) {
  for (double t : {0.5, 0.7, 0.9}) {
    SessionConfig cfg = Ideal(2, 0.0);
    cfg.bob_tap_transmission = t;
    cfg.target_key_bits = 20000;
    const Transcript tr = RunSession(cfg, AttackModel::TrojanHorse());
    EXPECT_EQ(tr.verdict, Verdict::kAccepted);
    const double read =
        static_cast<double>(tr.eve.agreeing_bits) / tr.alice_key_bits.size();
    EXPECT_NEAR(read, t, 0.015);
    EXPECT_EQ(tr.eve.agreeing_bits, tr.eve.decoded_bits);
  }
}

TEST(TrojanTest, FullTransmissionReadsEverything) {
  SessionConfig cfg = Ideal(3, 0.3);
  cfg.bob_tap_transmission = 1.0;
  cfg.target_key_bits = 2000;
  const Transcript tr = RunSession(cfg, AttackModel::TrojanHorse());
  EXPECT_EQ(tr.verdict, Verdict::kAccepted);
  EXPECT_EQ(tr.eve.agreeing_bits, tr.alice_key_bits.size());
  EXPECT_EQ(TrojanViolationProbability(cfg, 1), 0.0);
}

TEST(TrojanTest, DetectionRateMatchesClosedForm) {
  SessionConfig cfg;
  cfg.n_angles = 3;
  cfg.amode_prob = 1.0;
  cfg.mean_photons = 1.0;
  cfg.bob_tap_transmission = 0.5;
  cfg.target_key_bits = 1;
  cfg.max_rounds = 1'000'000;
  const double p = TrojanViolationProbability(cfg, 1);
  EXPECT_NEAR(p, 1.0 / 2 / 3 * std::exp(-0.5) * 0.5 * 0.5, 1e-15);
  constexpr int kSessions = 3000;
  double rounds = 0.0;
  for (int i = 0; i < kSessions; ++i) {
    cfg.seed = 4000 + i;
    const Transcript tr = RunSession(cfg, AttackModel::TrojanHorse());
    ASSERT_EQ(tr.verdict, Verdict::kAuthFailure);
    rounds += static_cast<double>(tr.rounds.size());
  }
  // Geometric mean 1/p, relative standard error 1/sqrt(kSessions).
  EXPECT_NEAR(rounds / kSessions * p, 1.0, 4.0 / std::sqrt(kSessions * 1.0));
}

TEST(TrojanTest, MoreAncillaPhotonsClosedFormMatchesSimulation) {
  SessionConfig cfg;
  cfg.n_angles = 2;
  cfg.amode_prob = 1.0;
  cfg.mean_photons = 0.5;
  cfg.bob_tap_transmission = 0.6;
  cfg.target_key_bits = 1;
  cfg.max_rounds = 1'000'000;
  const double p = TrojanViolationProbability(cfg, 3);
  constexpr int kSessions = 3000;
  double rounds = 0.0;
  for (int i = 0; i < kSessions; ++i) {
    cfg.seed = 60000 + i;
    rounds += RunSession(cfg, AttackModel::TrojanHorse(3)).rounds.size();
  }
  EXPECT_NEAR(rounds / kSessions * p, 1.0, 4.0 / std::sqrt(kSessions * 1.0));
}

}  // namespace
}  // namespace tqkd
