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

#include <cmath>
#include <string>

namespace tqkd {

void AttackModel::Validate() const {
  if (!(pns_eta > 0.0 && pns_eta < 1.0)) {
    throw ConfigError("eta", "must be in (0, 1), got " + FormatDouble(pns_eta));
  }
  if (trojan_ancilla_photons < 1) {
    throw ConfigError("ancilla_photons", "must be >= 1");
  }
}

std::string_view AttackName(AttackKind kind) {
  switch (kind) {
    case AttackKind::kHonest:
      return "honest";
    case AttackKind::kPns:
      return "pns";
    case AttackKind::kImpersonation:
      return "impersonation";
    case AttackKind::kTrojanHorse:
      return "trojan";
  }
  return "?";
}

AttackKind ParseAttackKind(std::string_view name) {
  for (AttackKind kind : {AttackKind::kHonest, AttackKind::kPns,
                          AttackKind::kImpersonation, AttackKind::kTrojanHorse}) {
    if (AttackName(kind) == name) return kind;
  }
  throw ConfigError("attack",
                    "expected honest|pns|impersonation|trojan, got '" +
                        std::string(name) + "'");
}

bool ApplyAttackSetting(AttackModel& attack, std::string_view key,
                        std::string_view value) {
  if (key == "attack") {
    attack.kind = ParseAttackKind(value);
  } else if (key == "eta") {
    attack.pns_eta = ParseDouble(key, value);
  } else if (key == "ancilla_photons") {
    attack.trojan_ancilla_photons = ParseU64(key, value);
  } else {
    return false;
  }
  return true;
}

std::string FormatAttackModel(const AttackModel& attack) {
  return "attack=" + std::string(AttackName(attack.kind)) +
         " eta=" + FormatDouble(attack.pns_eta) +
         " ancilla_photons=" + std::to_string(attack.trojan_ancilla_photons);
}

void EveState::BeginRound() { *this = EveState{}; }

CoherentPulse PnsIntercept(const CoherentPulse& pulse, double eta,
                           Direction /*direction*/, EveState& state) {
  const SplitPulse split = BeamSplit(pulse, eta);
  state.reflected_pulses.push_back(split.reflected);
  return split.transmitted;
}

CoherentPulse ImpersonateForward(const CoherentPulse& pulse,
                                 const ScreeningSet& screening,
                                 double mean_photons, EveState& state,
                                 Rng& rng) {
  state.stored_pulse_e1 = pulse;
  EveState::FakeParams fake;
  fake.theta = Angle(rng.Uniform() * kPi);
  fake.s = rng.Bit();
  fake.alpha_a_index =
      1 + static_cast<int>(rng.UniformIndex(screening.size()));
  state.fake = fake;
  Angle polarization = fake.theta;
  if (fake.s == 0) polarization += screening.angle(fake.alpha_a_index);
  return CoherentPulse{polarization, mean_photons, Wavelength::kProtocol};
}

int ImpersonateDecode(const CoherentPulse& returning,
                      const ScreeningSet& screening, PhotonMode mode,
                      EveState& state, Rng& rng) {
  const EveState::FakeParams& fake = state.fake.value();
  Angle undo = -fake.theta;
  if (fake.s == 0) undo += -screening.angle(fake.alpha_a_index);
  const int guess = 1 + static_cast<int>(rng.UniformIndex(screening.size()));
  state.guess_alpha_b_index = guess;
  const CoherentPulse aligned =
      Rotate(Rotate(returning, undo), -screening.angle(guess));

  const PhotonBatch batch = mode == PhotonMode::kIdealSinglePhoton
                                ? PhotonBatch{1, aligned.polarization}
                                : SamplePhotons(aligned, rng);
  const auto [d0, d1] = CountClicks(batch, kMeasurementBasis, rng);
  int bit;
  if (d0 > d1) {
    bit = 0;
  } else if (d1 > d0) {
    bit = 1;
  } else {
    bit = rng.Bit();
  }
  state.decoded_bit = bit;
  return bit;
}

CoherentPulse ImpersonateReencode(const ScreeningSet& screening,
                                  EveState& state) {
  const int k = state.decoded_bit.value();
  const Angle encoding =
      Angle(k == 0 ? kPi / 4.0 : -kPi / 4.0) +
      screening.angle(state.guess_alpha_b_index.value());
  return Rotate(state.stored_pulse_e1.value(), encoding);
}

TrojanTransmission TrojanAttach(const CoherentPulse& pulse,
                                std::uint64_t ancilla_photons,
                                EveState& /*state*/) {
  return {pulse, PhotonBatch{ancilla_photons, Angle(0.0), Wavelength::kForeign}};
}

std::optional<int> TrojanExtract(const PhotonBatch& returning_ancilla,
                                 int announced_alpha_b_index,
                                 const ScreeningSet& screening,
                                 EveState& state, Rng& rng) {
  state.stored_ancilla_e2 = returning_ancilla;
  if (returning_ancilla.count == 0) return std::nullopt;
  const PhotonBatch aligned =
      Rotate(returning_ancilla, -screening.angle(announced_alpha_b_index));
  const auto [d0, d1] = CountClicks(aligned, kMeasurementBasis, rng);
  int bit;
  if (d0 > d1) {
    bit = 0;
  } else if (d1 > d0) {
    bit = 1;
  } else {
    bit = rng.Bit();
  }
  state.decoded_bit = bit;
  return bit;
}

double TrojanViolationProbability(const SessionConfig& cfg,
                                  std::uint64_t ancilla_photons) {
  const double t = cfg.bob_tap_transmission;
  // No legitimate photon at Bob's monitor.
  double p_monitor_dark;
  if (cfg.photon_mode == PhotonMode::kIdealSinglePhoton) {
    p_monitor_dark = t < 1.0 ? 0.0 : 1.0;
  } else {
    p_monitor_dark =
        std::exp(-(1.0 - t) * cfg.mean_photons * cfg.channel_transmission);
  }
  const int n = cfg.n_angles;
  const ScreeningSet screening(n);
  // Given j tapped ancilla photons, O_b is the wrong bit iff all of them hit
  // the detector opposite to k xor theta*-bit. Averaging theta* over {0, pi/2}
  // swaps which detector is wrong, giving (p0^j + p1^j) / 2.
  double violation = 0.0;
  for (int k = 0; k <= 1; ++k) {
    for (int b = 1; b <= n; ++b) {
      const Angle pol =
          Angle(k == 0 ? kPi / 4.0 : -kPi / 4.0) + screening.angle(b);
      const double c = std::cos(pol.radians() - kMeasurementBasis.radians());
      const double p0 = c * c;
      const double p1 = 1.0 - p0;
      double sum_j = 0.0;
      double binom = 1.0;
      for (std::uint64_t j = 1; j <= ancilla_photons; ++j) {
        binom = binom * static_cast<double>(ancilla_photons - j + 1) /
                static_cast<double>(j);
        const double p_j = binom * std::pow(1.0 - t, static_cast<double>(j)) *
                           std::pow(t, static_cast<double>(ancilla_photons - j));
        sum_j += p_j * 0.5 *
                 (std::pow(p0, static_cast<double>(j)) +
                  std::pow(p1, static_cast<double>(j)));
      }
      violation += sum_j;
    }
  }
  violation /= 2.0 * n;
  // A-mode, s = 0, matched screening angles.
  return cfg.amode_prob * 0.5 * (1.0 / n) * p_monitor_dark * violation;
}

}  // namespace tqkd
