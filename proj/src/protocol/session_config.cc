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

#include "tqkd/protocol/session_config.h"

#include <charconv>
#include <cmath>
#include <limits>
#include <string>

namespace tqkd {
namespace {

void RequireUnitHalfOpen(const char* key, double v) {
  if (!(v > 0.0 && v <= 1.0)) {
    throw ConfigError(key, "must be in (0, 1], got " + FormatDouble(v));
  }
}

}  // namespace

void SessionConfig::Validate() const {
  if (n_angles < 2) {
    throw ConfigError("N", "must be >= 2, got " + std::to_string(n_angles));
  }
  if (!(amode_prob >= 0.0 && amode_prob <= 1.0)) {
    throw ConfigError("c", "must be in [0, 1], got " + FormatDouble(amode_prob));
  }
  if (!(mean_photons >= 0.0 && std::isfinite(mean_photons))) {
    throw ConfigError("mu", "must be >= 0, got " + FormatDouble(mean_photons));
  }
  RequireUnitHalfOpen("t", bob_tap_transmission);
  RequireUnitHalfOpen("t_link", channel_transmission);
  RequireUnitHalfOpen("eta_det", detector_efficiency);
  if (!(pulse_rate > 0.0 && std::isfinite(pulse_rate))) {
    throw ConfigError("f_rep", "must be > 0, got " + FormatDouble(pulse_rate));
  }
  if (target_key_bits < 1) throw ConfigError("key_bits", "must be >= 1");
  if (max_rounds < 1) throw ConfigError("max_rounds", "must be >= 1");
}

double ParseDouble(std::string_view key, std::string_view text) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ConfigError(std::string(key),
                      "expected a number, got '" + std::string(text) + "'");
  }
  return value;
}

std::uint64_t ParseU64(std::string_view key, std::string_view text) {
  std::uint64_t value = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ConfigError(std::string(key), "expected an unsigned integer, got '" +
                                            std::string(text) + "'");
  }
  return value;
}

int ParseInt(std::string_view key, std::string_view text) {
  int value = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ConfigError(std::string(key),
                      "expected an integer, got '" + std::string(text) + "'");
  }
  return value;
}

std::string FormatDouble(double value) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

bool ApplySessionSetting(SessionConfig& cfg, std::string_view key,
                         std::string_view value) {
  if (key == "N") {
    cfg.n_angles = ParseInt(key, value);
  } else if (key == "c") {
    cfg.amode_prob = ParseDouble(key, value);
  } else if (key == "mu") {
    cfg.mean_photons = ParseDouble(key, value);
  } else if (key == "t") {
    cfg.bob_tap_transmission = ParseDouble(key, value);
  } else if (key == "t_link") {
    cfg.channel_transmission = ParseDouble(key, value);
  } else if (key == "eta_det") {
    cfg.detector_efficiency = ParseDouble(key, value);
  } else if (key == "f_rep") {
    cfg.pulse_rate = ParseDouble(key, value);
  } else if (key == "key_bits") {
    cfg.target_key_bits = ParseU64(key, value);
  } else if (key == "max_rounds") {
    cfg.max_rounds = ParseU64(key, value);
  } else if (key == "seed") {
    cfg.seed = ParseU64(key, value);
  } else if (key == "photon_mode") {
    if (value == "coherent") {
      cfg.photon_mode = PhotonMode::kCoherent;
    } else if (value == "ideal") {
      cfg.photon_mode = PhotonMode::kIdealSinglePhoton;
    } else {
      throw ConfigError("photon_mode", "expected 'coherent' or 'ideal', got '" +
                                           std::string(value) + "'");
    }
  } else {
    return false;
  }
  return true;
}

std::string_view PhotonModeName(PhotonMode mode) {
  return mode == PhotonMode::kCoherent ? "coherent" : "ideal";
}

std::string FormatSessionConfig(const SessionConfig& cfg) {
  std::string out;
  auto add = [&out](std::string_view key, const std::string& value) {
    if (!out.empty()) out += ' ';
    out += key;
    out += '=';
    out += value;
  };
  add("N", std::to_string(cfg.n_angles));
  add("c", FormatDouble(cfg.amode_prob));
  add("mu", FormatDouble(cfg.mean_photons));
  add("t", FormatDouble(cfg.bob_tap_transmission));
  add("t_link", FormatDouble(cfg.channel_transmission));
  add("eta_det", FormatDouble(cfg.detector_efficiency));
  add("f_rep", FormatDouble(cfg.pulse_rate));
  add("key_bits", std::to_string(cfg.target_key_bits));
  add("max_rounds", std::to_string(cfg.max_rounds));
  add("seed", std::to_string(cfg.seed));
  add("photon_mode", std::string(PhotonModeName(cfg.photon_mode)));
  return out;
}

}  // namespace tqkd
