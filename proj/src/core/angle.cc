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

#include "tqkd/core/angle.h"

#include <cmath>

namespace tqkd {

double Angle::Reduce(double radians) {
  double r = std::fmod(radians, kPi);
  if (r < 0.0) r += kPi;
  // fmod of a tiny negative value plus pi can round up to pi itself.
  if (r >= kPi) r = 0.0;
  return r;
}

double Angle::Distance(Angle a, Angle b) {
  const double d = std::fabs(a.value_ - b.value_);
  return std::fmin(d, kPi - d);
}

}  // namespace tqkd
