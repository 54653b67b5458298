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

#ifndef TQKD_CORE_OPTICS_H_
#define TQKD_CORE_OPTICS_H_

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>

#include "tqkd/core/angle.h"
#include "tqkd/core/rng.h"

namespace tqkd {

// The public set of N screening angles alpha_i = i*pi/(N+1), i = 1..N.
// Matching is decided on indices; angles are never compared as floats.
class ScreeningSet {
 public:
  explicit ScreeningSet(int n_angles);

  int size() const { return n_; }
  Angle angle(int index) const;
  // alpha_a + alpha_b == pi.
  bool Matches(int index_a, int index_b) const {
    return index_a + index_b == n_ + 1;
  }

 private:
  int n_;
};

// Throws std::invalid_argument unless 1 <= index <= n_angles and n_angles >= 2.
Angle ScreeningAngle(int index, int n_angles);

enum class Wavelength : std::uint8_t { kProtocol, kForeign };

struct CoherentPulse {
  Angle polarization;
  double mean_photons = 0.0;
  Wavelength wavelength = Wavelength::kProtocol;
};

struct PhotonBatch {
  std::uint64_t count = 0;
  Angle polarization;
  Wavelength wavelength = Wavelength::kProtocol;
};

class MeasurementOutcome {
 public:
  enum class Kind : std::uint8_t { kBit, kEmpty, kAmbiguous };

  MeasurementOutcome() = default;
  // Classifies a pair of click counts from detectors D0 and D1.
  static MeasurementOutcome FromClicks(std::uint64_t clicks_d0,
                                       std::uint64_t clicks_d1);

  Kind kind() const { return kind_; }
  bool is_bit() const { return kind_ == Kind::kBit; }
  bool is_empty() const { return kind_ == Kind::kEmpty; }
  bool is_ambiguous() const { return kind_ == Kind::kAmbiguous; }
  // Only meaningful when is_bit().
  int bit() const { return clicks_d0_ > 0 ? 0 : 1; }
  std::uint64_t clicks_d0() const { return clicks_d0_; }
  std::uint64_t clicks_d1() const { return clicks_d1_; }

  // "0", "1", "E" or "A".
  std::string KindLabel() const;

  bool operator==(const MeasurementOutcome&) const = default;

 private:
  Kind kind_ = Kind::kEmpty;
  std::uint64_t clicks_d0_ = 0;
  std::uint64_t clicks_d1_ = 0;
};

CoherentPulse Rotate(const CoherentPulse& pulse, Angle phi);
PhotonBatch Rotate(const PhotonBatch& batch, Angle phi);
inline CoherentPulse Rotate(const CoherentPulse& pulse, double phi) {
  return Rotate(pulse, Angle(phi));
}

struct SplitPulse {
  CoherentPulse transmitted;
  CoherentPulse reflected;
};

// Beam splitter with transmission eta. Throws std::invalid_argument for eta
// outside [0, 1].
SplitPulse BeamSplit(const CoherentPulse& pulse, double eta);

// Scales the mean photon number; the coherent-state equivalent of
// independently losing each photon with probability 1 - transmission.
CoherentPulse Attenuate(const CoherentPulse& pulse, double transmission);

PhotonBatch SamplePhotons(const CoherentPulse& pulse, Rng& rng);

// Photon counts on (D0, D1) after a polarizing beam splitter at `basis`.
// Each photon goes to D0 with probability cos^2(polarization - basis).
std::pair<std::uint64_t, std::uint64_t> CountClicks(const PhotonBatch& batch,
                                                    Angle basis, Rng& rng);

MeasurementOutcome MeasurePbs(const PhotonBatch& batch, Angle basis, Rng& rng);
// Several batches landing on the same pair of detectors.
MeasurementOutcome MeasurePbs(std::initializer_list<PhotonBatch> batches,
                              Angle basis, Rng& rng);

struct TapResult {
  PhotonBatch into_detector;
  PhotonBatch onward;
};

// Diverts each photon independently with probability `fraction`.
TapResult Tap(const PhotonBatch& batch, double fraction, Rng& rng);

// Basis of every protocol PBS: detector D0 sits at pi/4.
inline const Angle kMeasurementBasis{kPi / 4.0};

}  // namespace tqkd

#endif  // TQKD_CORE_OPTICS_H_
