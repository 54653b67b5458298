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

#ifndef TQKD_ADVERSARY_ADVERSARY_H_
#define TQKD_ADVERSARY_ADVERSARY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tqkd/core/optics.h"
#include "tqkd/core/rng.h"
#include "tqkd/protocol/session_config.h"

namespace tqkd {

enum class AttackKind : std::uint8_t {
  kHonest,
  kPns,
  kImpersonation,
  kTrojanHorse,
};

struct AttackModel {
  AttackKind kind = AttackKind::kHonest;
  double pns_eta = 0.5;                    // used by PNS, always in (0, 1)
  std::uint64_t trojan_ancilla_photons = 1;  // Trojan horse only

  static AttackModel Honest() { return {}; }
  static AttackModel Pns(double eta) { return {AttackKind::kPns, eta, 1}; }
  static AttackModel Impersonation() {
    return {AttackKind::kImpersonation, 0.5, 1};
  }
  static AttackModel TrojanHorse(std::uint64_t ancilla_photons = 1) {
    return {AttackKind::kTrojanHorse, 0.5, ancilla_photons};
  }

  // Throws ConfigError("eta", ...) for an eta outside (0, 1), whatever the kind.
  void Validate() const;
};

std::string_view AttackName(AttackKind kind);
// Accepts honest|pns|impersonation|trojan. Throws ConfigError("attack", ...).
AttackKind ParseAttackKind(std::string_view name);

// Handles `attack`, `eta` and `ancilla_photons`; false for other keys.
bool ApplyAttackSetting(AttackModel& attack, std::string_view key,
                        std::string_view value);
std::string FormatAttackModel(const AttackModel& attack);

// Eve's per-round memory. Each field is populated only by the attack phase
// that defines it and cleared by BeginRound().
struct EveState {
  struct FakeParams {
    Angle theta;
    int s = 0;
    int alpha_a_index = 1;
  };

  std::optional<CoherentPulse> stored_pulse_e1;
  std::optional<FakeParams> fake;
  std::optional<int> guess_alpha_b_index;
  std::optional<int> decoded_bit;
  std::optional<PhotonBatch> stored_ancilla_e2;
  std::vector<CoherentPulse> reflected_pulses;

  void BeginRound();
};

// Session totals reported alongside the transcript.
struct EveSummary {
  AttackKind kind = AttackKind::kHonest;
  std::uint64_t decoded_bits = 0;   // sifted rounds where Eve holds a bit
  std::uint64_t agreeing_bits = 0;  // ... and that bit equals Bob's k
  std::uint64_t exposed_rounds = 0;
  double pns_stored_mean_ab = 0.0;  // summed over rounds
  double pns_stored_mean_ba = 0.0;

  bool operator==(const EveSummary&) const = default;
};

enum class Direction : std::uint8_t { kAliceToBob, kBobToAlice };

// --- Photon-number splitting -------------------------------------------------

// Eve replaces the link by a lossless one and keeps the reflected arm of a
// beam splitter with transmission eta. The reflected pulse is appended to
// state.reflected_pulses.
CoherentPulse PnsIntercept(const CoherentPulse& pulse, double eta,
                           Direction direction, EveState& state);

// --- Impersonation -----------------------------------------------------------

// Stores the original pulse as E1 and returns a fake |theta' + d_{0s'} a'>
// with theta' uniform on [0, pi), s' and a' uniform.
CoherentPulse ImpersonateForward(const CoherentPulse& pulse,
                                 const ScreeningSet& screening,
                                 double mean_photons, EveState& state,
                                 Rng& rng);

// Undoes the fake preparation, guesses alpha_b, measures at pi/4 and commits
// to k'. Empty or tied outcomes commit to a uniform bit.
int ImpersonateDecode(const CoherentPulse& returning,
                      const ScreeningSet& screening, PhotonMode mode,
                      EveState& state, Rng& rng);

// Encodes the stored E1 with U((-1)^k' pi/4 + alpha_b') for Alice.
CoherentPulse ImpersonateReencode(const ScreeningSet& screening,
                                  EveState& state);

// --- Trojan horse ------------------------------------------------------------

struct TrojanTransmission {
  CoherentPulse signal;
  PhotonBatch ancilla;
};

// Rides a Foreign-wavelength ancilla at polarization 0 along the pulse.
TrojanTransmission TrojanAttach(const CoherentPulse& pulse,
                                std::uint64_t ancilla_photons, EveState& state);

// Stores the returning ancilla as E2 and, once alpha_b is public, rotates it
// by -alpha_b and measures at pi/4. Returns nothing when every ancilla photon
// was absorbed by Bob's monitor.
std::optional<int> TrojanExtract(const PhotonBatch& returning_ancilla,
                                 int announced_alpha_b_index,
                                 const ScreeningSet& screening,
                                 EveState& state, Rng& rng);

// Closed-form probability that a single round ends in an integrity failure
// under the Trojan-horse attack, averaged over mode, theta*, s, k and the
// screening indices. Nonzero only in coherent mode: there Bob's monitor may
// receive no legitimate photon, leaving the ancilla alone to set O_b.
double TrojanViolationProbability(const SessionConfig& cfg,
                                  std::uint64_t ancilla_photons);

}  // namespace tqkd

#endif  // TQKD_ADVERSARY_ADVERSARY_H_
