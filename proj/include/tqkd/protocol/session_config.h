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

#ifndef TQKD_PROTOCOL_SESSION_CONFIG_H_
#define TQKD_PROTOCOL_SESSION_CONFIG_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tqkd {

enum class PhotonMode : std::uint8_t {
  kCoherent,
  // Every pulse is exactly one photon; channel loss and detector efficiency
  // are ignored and Bob's monitor port sees a copy of the passing photon
  // (whenever t < 1) without removing it from the onward path.
  kIdealSinglePhoton,
};

// Raised for an invalid setting; key() names the offending config key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& message)
      : std::runtime_error(key + ": " + message), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

struct SessionConfig {
  int n_angles = 3;                    // N
  double amode_prob = 0.1;             // c
  double mean_photons = 6.0;           // mu
  double bob_tap_transmission = 0.7;   // t
  double channel_transmission = 1.0;   // t_link, per traversal
  double detector_efficiency = 1.0;    // eta_det, Alice's detectors
  double pulse_rate = 1e6;             // f_rep, Hz
  std::uint64_t target_key_bits = 256;
  std::uint64_t max_rounds = 1'000'000;  // session aborts beyond this
  std::uint64_t seed = 1;
  PhotonMode photon_mode = PhotonMode::kCoherent;

  // Throws ConfigError naming the first out-of-range field.
  void Validate() const;
};

// Applies one `key = value` setting. Returns false for an unknown key, throws
// ConfigError for a malformed value. Range checks happen in Validate().
bool ApplySessionSetting(SessionConfig& cfg, std::string_view key,
                         std::string_view value);

// Canonical `key=value` pairs, space separated, in a fixed order.
std::string FormatSessionConfig(const SessionConfig& cfg);

std::string_view PhotonModeName(PhotonMode mode);

// Strict numeric parsing shared by the config readers. Throw ConfigError.
double ParseDouble(std::string_view key, std::string_view text);
std::uint64_t ParseU64(std::string_view key, std::string_view text);
int ParseInt(std::string_view key, std::string_view text);

// Shortest representation that parses back to the same double.
std::string FormatDouble(double value);

}  // namespace tqkd

#endif  // TQKD_PROTOCOL_SESSION_CONFIG_H_
