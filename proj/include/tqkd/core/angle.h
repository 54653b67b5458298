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

#ifndef TQKD_CORE_ANGLE_H_
#define TQKD_CORE_ANGLE_H_

#include <numbers>

namespace tqkd {

inline constexpr double kPi = std::numbers::pi;

// A linear polarization on the equator of the Poincare sphere. Polarizations
// are pi-periodic, so the stored value is always reduced into [0, pi).
class Angle {
 public:
  constexpr Angle() = default;
  explicit Angle(double radians) : value_(Reduce(radians)) {}

  double radians() const { return value_; }

  Angle operator+(Angle other) const { return Angle(value_ + other.value_); }
  Angle operator-(Angle other) const { return Angle(value_ - other.value_); }
  Angle operator-() const { return Angle(-value_); }
  Angle& operator+=(Angle other) { return *this = *this + other; }

  bool operator==(const Angle&) const = default;

  // Shortest distance between the two polarizations on the pi-circle, in
  // [0, pi/2].
  static double Distance(Angle a, Angle b);

  static double Reduce(double radians);

 private:
  double value_ = 0.0;
};

}  // namespace tqkd

#endif  // TQKD_CORE_ANGLE_H_
