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

#ifndef TQKD_CLI_ACCEPTANCE_H_
#define TQKD_CLI_ACCEPTANCE_H_

#include <functional>
#include <string>
#include <vector>

namespace tqkd::cli {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

// Replaceable numerical kernels, so a negative control can feed the suite a
// corrupted implementation and watch the named criteria fail.
struct AcceptanceHooks {
  std::function<double(int)> fidelity;
  std::function<double()> critical_info;

  static AcceptanceHooks Default();
};

// Frozen from an independent 40-digit partial-sum evaluation of
// sum_n e^-1 / n! * I(n).
inline constexpr double kCriticalInfoReference = 0.6900255606;
// Exhaustive enumeration over Eve's guess and both measurement branches, N=2.
inline constexpr double kImpersonationQberReference = 0.1875;

std::vector<CriterionResult> RunAcceptance(
    const AcceptanceHooks& hooks = AcceptanceHooks::Default());

// "[PASS] 3 Critical amplitude (0.01 s): <detail>"
std::string FormatCriterion(const CriterionResult& result);

}  // namespace tqkd::cli

#endif  // TQKD_CLI_ACCEPTANCE_H_
