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

#ifndef TQKD_PROTOCOL_PROTOCOL_H_
#define TQKD_PROTOCOL_PROTOCOL_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tqkd/adversary/adversary.h"
#include "tqkd/core/optics.h"
#include "tqkd/core/rng.h"
#include "tqkd/protocol/session_config.h"

namespace tqkd {

enum class Mode : std::uint8_t { kA, kT };

// Per-round anomaly bits.
enum AnomalyFlag : std::uint32_t {
  kAliceEmpty = 1u << 0,
  kAliceAmbiguous = 1u << 1,
  kBobTapAmbiguous = 1u << 2,
  kIntegrityViolation = 1u << 3,
};

struct RoundInputs {
  Angle theta;
  Mode mode = Mode::kT;
  int s = 0;
  int alpha_a_index = 1;
  int key_bit = 0;
  int alpha_b_index = 1;
};

struct RoundRecord {
  std::uint64_t index = 0;
  Mode mode = Mode::kT;
  Angle theta;
  int s = 0;
  std::optional<Angle> theta_star;  // set iff mode == kA
  int alpha_a_index = 1;
  int alpha_b_index = 1;
  int key_bit = 0;
  MeasurementOutcome outcome_alice;
  MeasurementOutcome outcome_bob_tap;
  bool matched = false;
  bool sifted = false;
  std::optional<bool> integrity_ok;
  std::uint32_t anomaly_flags = 0;

  bool operator==(const RoundRecord&) const = default;
};

enum class Verdict : std::uint8_t {
  kAccepted,
  kHashMismatch,
  kAuthFailure,
  kAborted,
};

std::string_view VerdictName(Verdict verdict);

struct Transcript {
  SessionConfig config;
  AttackModel attack;
  std::vector<RoundRecord> rounds;
  std::string alice_key_bits;  // '0' / '1' characters
  std::string bob_key_bits;
  std::uint64_t hash_alice = 0;
  std::uint64_t hash_bob = 0;
  Verdict verdict = Verdict::kAborted;
  EveSummary eve;
};

// Alice's pulse |theta + d_{0s} alpha_a> at the configured mean photon number.
CoherentPulse AlicePrepare(Angle theta, int alpha_a_index, int s,
                           const SessionConfig& cfg);

// Draws, in this order: mode, theta, s, alpha_a, k, alpha_b.
RoundInputs DrawRoundInputs(const SessionConfig& cfg, Rng& rng);

struct BobOutput {
  CoherentPulse onward;
  std::optional<PhotonBatch> ancilla_onward;
  MeasurementOutcome tap_outcome;
};

// Rotates by (-1)^k pi/4 + alpha_b and diverts the fraction 1 - t to Bob's
// monitor PBS at pi/4. An attached ancilla gets the same rotation and tap and
// lands on the same monitor detectors.
BobOutput BobEncode(const CoherentPulse& pulse, int key_bit, int alpha_b_index,
                    const SessionConfig& cfg, Rng& rng,
                    const std::optional<PhotonBatch>& ancilla = std::nullopt);

// Rotates by -theta + d_{1s} alpha_a, applies eta_det and measures at pi/4.
// Foreign-wavelength light never reaches the detectors.
MeasurementOutcome AliceCompensateMeasure(const CoherentPulse& pulse,
                                          Angle theta, int s, int alpha_a_index,
                                          const SessionConfig& cfg, Rng& rng);

// Checks O_b = k xor (2 theta* / pi). Returns nothing unless the record is a
// matched A-mode record with s = 0 and a definite tap bit.
std::optional<bool> AmodeVerify(const RoundRecord& record);

// Alice's key bit for a matched T-mode record with a definite outcome.
std::optional<int> TmodeSift(const RoundRecord& record);

// 64-bit FNV-1a over the ASCII '0'/'1' characters. Throws
// std::invalid_argument for an empty string or any other character.
std::uint64_t HashKey(std::string_view bits);

// Runs rounds until target_key_bits are sifted (then compares hashes), an
// integrity check fails, or max_rounds is exhausted.
Transcript RunSession(const SessionConfig& cfg, const AttackModel& attack);

struct TranscriptStats {
  std::uint64_t rounds = 0;
  std::uint64_t sifted_bits = 0;
  std::uint64_t key_errors = 0;
  double qber = 0.0;
  double sift_rate = 0.0;
  std::uint64_t amode_rounds = 0;
  std::uint64_t amode_verified = 0;
  std::uint64_t integrity_failures = 0;
  std::uint64_t alice_empty = 0;
  std::uint64_t alice_ambiguous = 0;
  std::uint64_t bob_tap_ambiguous = 0;
};

TranscriptStats Summarize(const Transcript& transcript);

}  // namespace tqkd

#endif  // TQKD_PROTOCOL_PROTOCOL_H_
