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

#ifndef TQKD_CLI_RUN_CONFIG_H_
#define TQKD_CLI_RUN_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tqkd/adversary/adversary.h"
#include "tqkd/protocol/session_config.h"

namespace tqkd::cli {

// Grid for the I_E(mu) curves. The default eta set 0.1..0.9 is a local choice.
struct SweepSpec {
  double mu_min = 0.0;
  double mu_max = 20.0;
  int mu_points = 201;
  std::vector<double> etas = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  std::vector<double> t_values = {0.7, 0.9};
  double tol = 1e-8;

  void Validate() const;
};

struct RunConfig {
  SessionConfig session;
  AttackModel attack;
  SweepSpec sweep;

  void Validate() const;
};

using Override = std::pair<std::string, std::string>;

// File could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses flat `key = value` lines; '#' starts a comment. Overrides are applied
// in order after the file. Throws ConfigError naming the key (or "line N" for
// a line without '=') and validates the result.
RunConfig ParseConfigText(std::string_view text,
                          const std::vector<Override>& overrides = {});
// Throws IoError when the file cannot be read.
RunConfig ParseConfigFile(const std::filesystem::path& path,
                          const std::vector<Override>& overrides = {});

// Splits "KEY=VALUE"; throws ConfigError("--set", ...) when '=' is missing.
Override ParseOverride(std::string_view text);

// Session i of a batch runs with seed base ^ i.
inline std::uint64_t SessionSeed(std::uint64_t base, std::uint64_t index) {
  return base ^ index;
}

}  // namespace tqkd::cli

#endif  // TQKD_CLI_RUN_CONFIG_H_
