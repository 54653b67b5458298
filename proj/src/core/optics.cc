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

#include "tqkd/core/optics.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tqkd {

ScreeningSet::ScreeningSet(int n_angles) : n_(n_angles) {
  if (n_angles < 2) {
    throw std::invalid_argument("screening set needs N >= 2, got " +
                                std::to_string(n_angles));
  }
}

Angle ScreeningSet::angle(int index) const {
  return ScreeningAngle(index, n_);
}

Angle ScreeningAngle(int index, int n_angles) {
  if (n_angles < 2) {
    throw std::invalid_argument("screening set needs N >= 2");
  }
  if (index < 1 || index > n_angles) {
    throw std::invalid_argument("screening index " + std::to_string(index) +
                                " outside 1.." + std::to_string(n_angles));
  }
  return Angle(index * kPi / (n_angles + 1));
}

MeasurementOutcome MeasurementOutcome::FromClicks(std::uint64_t clicks_d0,
                                                  std::uint64_t clicks_d1) {
  MeasurementOutcome out;
  out.clicks_d0_ = clicks_d0;
  out.clicks_d1_ = clicks_d1;
  if (clicks_d0 == 0 && clicks_d1 == 0) {
    out.kind_ = Kind::kEmpty;
  } else if (clicks_d0 > 0 && clicks_d1 > 0) {
    out.kind_ = Kind::kAmbiguous;
  } else {
    out.kind_ = Kind::kBit;
  }
  return out;
}

std::string MeasurementOutcome::KindLabel() const {
  switch (kind_) {
    case Kind::kBit:
      return bit() == 0 ? "0" : "1";
    case Kind::kEmpty:
      return "E";
    case Kind::kAmbiguous:
      return "A";
  }
  return "?";
}

CoherentPulse Rotate(const CoherentPulse& pulse, Angle phi) {
  CoherentPulse out = pulse;
  out.polarization += phi;
  return out;
}

PhotonBatch Rotate(const PhotonBatch& batch, Angle phi) {
  PhotonBatch out = batch;
  out.polarization += phi;
  return out;
}

SplitPulse BeamSplit(const CoherentPulse& pulse, double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw std::invalid_argument("beam splitter transmission must be in [0, 1]");
  }
  SplitPulse out{pulse, pulse};
  out.transmitted.mean_photons = eta * pulse.mean_photons;
  // Subtraction keeps transmitted + reflected within one rounding of the input.
  out.reflected.mean_photons = pulse.mean_photons - out.transmitted.mean_photons;
  return out;
}

CoherentPulse Attenuate(const CoherentPulse& pulse, double transmission) {
  CoherentPulse out = pulse;
  out.mean_photons = pulse.mean_photons * transmission;
  return out;
}

PhotonBatch SamplePhotons(const CoherentPulse& pulse, Rng& rng) {
  return PhotonBatch{rng.Poisson(pulse.mean_photons), pulse.polarization,
                     pulse.wavelength};
}

std::pair<std::uint64_t, std::uint64_t> CountClicks(const PhotonBatch& batch,
                                                    Angle basis, Rng& rng) {
  const double c = std::cos(batch.polarization.radians() - basis.radians());
  const double p0 = c * c;
  std::uint64_t d0 = 0;
  for (std::uint64_t i = 0; i < batch.count; ++i) {
    if (rng.Bernoulli(p0)) ++d0;
  }
  return {d0, batch.count - d0};
}

MeasurementOutcome MeasurePbs(const PhotonBatch& batch, Angle basis,
                              Rng& rng) {
  const auto [d0, d1] = CountClicks(batch, basis, rng);
  return MeasurementOutcome::FromClicks(d0, d1);
}

MeasurementOutcome MeasurePbs(std::initializer_list<PhotonBatch> batches,
                              Angle basis, Rng& rng) {
  std::uint64_t d0 = 0;
  std::uint64_t d1 = 0;
  for (const PhotonBatch& batch : batches) {
    const auto [b0, b1] = CountClicks(batch, basis, rng);
    d0 += b0;
    d1 += b1;
  }
  return MeasurementOutcome::FromClicks(d0, d1);
}

TapResult Tap(const PhotonBatch& batch, double fraction, Rng& rng) {
  std::uint64_t diverted = 0;
  for (std::uint64_t i = 0; i < batch.count; ++i) {
    if (rng.Bernoulli(fraction)) ++diverted;
  }
  TapResult out{batch, batch};
  out.into_detector.count = diverted;
  out.onward.count = batch.count - diverted;
  return out;
}

}  // namespace tqkd
