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

#include "tqkd/protocol/protocol.h"

#include <stdexcept>

namespace tqkd {
namespace {

Angle BobRotation(int key_bit, Angle alpha_b) {
  return Angle(key_bit == 0 ? kPi / 4.0 : -kPi / 4.0) + alpha_b;
}

int ThetaStarBit(Angle theta_star) {
  return theta_star.radians() > kPi / 4.0 ? 1 : 0;
}

}  // namespace

std::string_view VerdictName(Verdict verdict) {
  switch (verdict) {
    case Verdict::kAccepted:
      return "Accepted";
    case Verdict::kHashMismatch:
      return "HashMismatch";
    case Verdict::kAuthFailure:
      return "AuthFailure";
    case Verdict::kAborted:
      return "Aborted";
  }
  return "?";
}

CoherentPulse AlicePrepare(Angle theta, int alpha_a_index, int s,
                           const SessionConfig& cfg) {
  Angle polarization = theta;
  if (s == 0) polarization += ScreeningAngle(alpha_a_index, cfg.n_angles);
  return CoherentPulse{polarization, cfg.mean_photons, Wavelength::kProtocol};
}

RoundInputs DrawRoundInputs(const SessionConfig& cfg, Rng& rng) {
  RoundInputs in;
  in.mode = rng.Bernoulli(cfg.amode_prob) ? Mode::kA : Mode::kT;
  if (in.mode == Mode::kA) {
    in.theta = Angle(rng.Bit() == 0 ? 0.0 : kPi / 2.0);
  } else {
    in.theta = Angle(rng.Uniform() * kPi);
  }
  const auto n = static_cast<std::uint64_t>(cfg.n_angles);
  in.s = rng.Bit();
  in.alpha_a_index = 1 + static_cast<int>(rng.UniformIndex(n));
  in.key_bit = rng.Bit();
  in.alpha_b_index = 1 + static_cast<int>(rng.UniformIndex(n));
  return in;
}

BobOutput BobEncode(const CoherentPulse& pulse, int key_bit, int alpha_b_index,
                    const SessionConfig& cfg, Rng& rng,
                    const std::optional<PhotonBatch>& ancilla) {
  const Angle rotation =
      BobRotation(key_bit, ScreeningAngle(alpha_b_index, cfg.n_angles));
  const CoherentPulse rotated = Rotate(pulse, rotation);
  const double t = cfg.bob_tap_transmission;

  BobOutput out;
  PhotonBatch monitor{0, rotated.polarization, rotated.wavelength};
  if (cfg.photon_mode == PhotonMode::kIdealSinglePhoton) {
    monitor.count = t < 1.0 ? 1 : 0;
    out.onward = rotated;
  } else {
    const SplitPulse split = BeamSplit(rotated, t);
    monitor = SamplePhotons(split.reflected, rng);
    out.onward = split.transmitted;
  }

  PhotonBatch tapped_ancilla{0, Angle(), Wavelength::kForeign};
  if (ancilla) {
    const TapResult tap = Tap(Rotate(*ancilla, rotation), 1.0 - t, rng);
    tapped_ancilla = tap.into_detector;
    out.ancilla_onward = tap.onward;
  }
  out.tap_outcome =
      MeasurePbs({monitor, tapped_ancilla}, kMeasurementBasis, rng);
  return out;
}

MeasurementOutcome AliceCompensateMeasure(const CoherentPulse& pulse,
                                          Angle theta, int s, int alpha_a_index,
                                          const SessionConfig& cfg, Rng& rng) {
  if (pulse.wavelength != Wavelength::kProtocol) return {};
  Angle compensation = -theta;
  if (s == 1) compensation += ScreeningAngle(alpha_a_index, cfg.n_angles);
  const CoherentPulse rotated = Rotate(pulse, compensation);
  const PhotonBatch batch =
      cfg.photon_mode == PhotonMode::kIdealSinglePhoton
          ? PhotonBatch{1, rotated.polarization, rotated.wavelength}
          : SamplePhotons(Attenuate(rotated, cfg.detector_efficiency), rng);
  return MeasurePbs(batch, kMeasurementBasis, rng);
}

std::optional<bool> AmodeVerify(const RoundRecord& record) {
  if (record.mode != Mode::kA || !record.matched || record.s != 0 ||
      !record.theta_star || !record.outcome_bob_tap.is_bit()) {
    return std::nullopt;
  }
  const int expected = record.key_bit ^ ThetaStarBit(*record.theta_star);
  return record.outcome_bob_tap.bit() == expected;
}

std::optional<int> TmodeSift(const RoundRecord& record) {
  if (record.mode != Mode::kT || !record.matched ||
      !record.outcome_alice.is_bit()) {
    return std::nullopt;
  }
  return record.outcome_alice.bit();
}

std::uint64_t HashKey(std::string_view bits) {
  if (bits.empty()) throw std::invalid_argument("cannot hash an empty key");
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("key bits must be '0' or '1'");
    }
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

Transcript RunSession(const SessionConfig& cfg, const AttackModel& attack) {
  cfg.Validate();
  attack.Validate();
  const ScreeningSet screening(cfg.n_angles);
  const double link = cfg.channel_transmission;
  Rng rng(cfg.seed);
  EveState eve;

  Transcript tr;
  tr.config = cfg;
  tr.attack = attack;
  tr.eve.kind = attack.kind;

  for (std::uint64_t round = 0; round < cfg.max_rounds; ++round) {
    eve.BeginRound();
    const RoundInputs in = DrawRoundInputs(cfg, rng);
    RoundRecord rec;
    rec.index = round;
    rec.mode = in.mode;
    rec.theta = in.theta;
    rec.s = in.s;
    if (in.mode == Mode::kA) rec.theta_star = in.theta;
    rec.alpha_a_index = in.alpha_a_index;
    rec.alpha_b_index = in.alpha_b_index;
    rec.key_bit = in.key_bit;
    rec.matched = screening.Matches(in.alpha_a_index, in.alpha_b_index);

    // Alice -> Bob.
    CoherentPulse pulse = AlicePrepare(in.theta, in.alpha_a_index, in.s, cfg);
    std::optional<PhotonBatch> ancilla;
    switch (attack.kind) {
      case AttackKind::kHonest:
        pulse = Attenuate(pulse, link);
        break;
      case AttackKind::kPns:
        pulse = PnsIntercept(pulse, attack.pns_eta, Direction::kAliceToBob, eve);
        tr.eve.pns_stored_mean_ab += eve.reflected_pulses.back().mean_photons;
        break;
      case AttackKind::kImpersonation:
        pulse = ImpersonateForward(Attenuate(pulse, link), screening,
                                   cfg.mean_photons, eve, rng);
        break;
      case AttackKind::kTrojanHorse: {
        const TrojanTransmission tx = TrojanAttach(
            Attenuate(pulse, link), attack.trojan_ancilla_photons, eve);
        pulse = tx.signal;
        ancilla = tx.ancilla;
        break;
      }
    }

    const BobOutput bob =
        BobEncode(pulse, in.key_bit, in.alpha_b_index, cfg, rng, ancilla);
    rec.outcome_bob_tap = bob.tap_outcome;

    // Bob -> Alice.
    CoherentPulse back = bob.onward;
    switch (attack.kind) {
      case AttackKind::kHonest:
      case AttackKind::kTrojanHorse:
        back = Attenuate(back, link);
        break;
      case AttackKind::kPns:
        back = PnsIntercept(back, attack.pns_eta, Direction::kBobToAlice, eve);
        tr.eve.pns_stored_mean_ba += eve.reflected_pulses.back().mean_photons;
        break;
      case AttackKind::kImpersonation:
        ImpersonateDecode(back, screening, cfg.photon_mode, eve, rng);
        back = Attenuate(ImpersonateReencode(screening, eve), link);
        break;
    }
    rec.outcome_alice = AliceCompensateMeasure(back, in.theta, in.s,
                                               in.alpha_a_index, cfg, rng);

    // Public announcements: mode, screening angles.
    if (attack.kind == AttackKind::kTrojanHorse) {
      TrojanExtract(*bob.ancilla_onward, in.alpha_b_index, screening, eve, rng);
    }
    if (rec.outcome_alice.is_empty()) rec.anomaly_flags |= kAliceEmpty;
    if (rec.outcome_alice.is_ambiguous()) rec.anomaly_flags |= kAliceAmbiguous;
    if (rec.outcome_bob_tap.is_ambiguous()) {
      rec.anomaly_flags |= kBobTapAmbiguous;
    }

    if (rec.mode == Mode::kA) {
      rec.integrity_ok = AmodeVerify(rec);
      if (rec.integrity_ok == false) {
        rec.anomaly_flags |= kIntegrityViolation;
        ++tr.eve.exposed_rounds;
        tr.rounds.push_back(rec);
        tr.verdict = Verdict::kAuthFailure;
        return tr;
      }
    } else if (const std::optional<int> bit = TmodeSift(rec)) {
      rec.sifted = true;
      tr.alice_key_bits.push_back(static_cast<char>('0' + *bit));
      tr.bob_key_bits.push_back(static_cast<char>('0' + in.key_bit));
      if (eve.decoded_bit) {
        ++tr.eve.decoded_bits;
        if (*eve.decoded_bit == in.key_bit) ++tr.eve.agreeing_bits;
      }
    }
    tr.rounds.push_back(rec);

    if (tr.alice_key_bits.size() >= cfg.target_key_bits) {
      tr.hash_alice = HashKey(tr.alice_key_bits);
      tr.hash_bob = HashKey(tr.bob_key_bits);
      tr.verdict = tr.hash_alice == tr.hash_bob ? Verdict::kAccepted
                                                : Verdict::kHashMismatch;
      return tr;
    }
  }
  tr.verdict = Verdict::kAborted;
  return tr;
}

TranscriptStats Summarize(const Transcript& transcript) {
  TranscriptStats s;
  s.rounds = transcript.rounds.size();
  for (const RoundRecord& r : transcript.rounds) {
    if (r.mode == Mode::kA) {
      ++s.amode_rounds;
      if (r.integrity_ok) ++s.amode_verified;
    }
    if (r.anomaly_flags & kIntegrityViolation) ++s.integrity_failures;
    if (r.anomaly_flags & kAliceEmpty) ++s.alice_empty;
    if (r.anomaly_flags & kAliceAmbiguous) ++s.alice_ambiguous;
    if (r.anomaly_flags & kBobTapAmbiguous) ++s.bob_tap_ambiguous;
  }
  const std::string& a = transcript.alice_key_bits;
  const std::string& b = transcript.bob_key_bits;
  s.sifted_bits = a.size();
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) ++s.key_errors;
  }
  if (s.sifted_bits > 0) {
    s.qber = static_cast<double>(s.key_errors) / s.sifted_bits;
  }
  if (s.rounds > 0) {
    s.sift_rate = static_cast<double>(s.sifted_bits) / s.rounds;
  }
  return s;
}

}  // namespace tqkd
