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

#include "tqkd/cli/run_config.h"

#include <fstream>
#include <sstream>

namespace tqkd::cli {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<double> ParseList(std::string_view key, std::string_view value) {
  std::vector<double> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = value.find(',', start);
    out.push_back(ParseDouble(key, Trim(value.substr(start, comma - start))));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

bool ApplySweepSetting(SweepSpec& sweep, std::string_view key,
                       std::string_view value) {
  if (key == "mu_min") {
    sweep.mu_min = ParseDouble(key, value);
  } else if (key == "mu_max") {
    sweep.mu_max = ParseDouble(key, value);
  } else if (key == "mu_points") {
    sweep.mu_points = ParseInt(key, value);
  } else if (key == "etas") {
    sweep.etas = ParseList(key, value);
  } else if (key == "t_values") {
    sweep.t_values = ParseList(key, value);
  } else if (key == "tol") {
    sweep.tol = ParseDouble(key, value);
  } else {
    return false;
  }
  return true;
}

void Apply(RunConfig& cfg, std::string_view key, std::string_view value) {
  if (ApplySessionSetting(cfg.session, key, value)) return;
  if (ApplyAttackSetting(cfg.attack, key, value)) return;
  if (ApplySweepSetting(cfg.sweep, key, value)) return;
  throw ConfigError(std::string(key), "unknown key");
}

}  // namespace

void SweepSpec::Validate() const {
  if (!(mu_min >= 0.0)) throw ConfigError("mu_min", "must be >= 0");
  if (!(mu_max > mu_min)) throw ConfigError("mu_max", "must exceed mu_min");
  if (mu_points < 2) throw ConfigError("mu_points", "must be >= 2");
  if (etas.empty()) throw ConfigError("etas", "must be nonempty");
  for (double eta : etas) {
    if (!(eta > 0.0 && eta < 1.0)) {
      throw ConfigError("etas", "each eta must be in (0, 1), got " +
                                    FormatDouble(eta));
    }
  }
  if (t_values.empty()) throw ConfigError("t_values", "must be nonempty");
  for (double t : t_values) {
    if (!(t > 0.0 && t <= 1.0)) {
      throw ConfigError("t_values",
                        "each t must be in (0, 1], got " + FormatDouble(t));
    }
  }
  if (!(tol > 0.0)) throw ConfigError("tol", "must be > 0");
}

void RunConfig::Validate() const {
  session.Validate();
  attack.Validate();
  sweep.Validate();
}

Override ParseOverride(std::string_view text) {
  const std::size_t eq = text.find('=');
  if (eq == std::string_view::npos) {
    throw ConfigError("--set", "expected KEY=VALUE, got '" +
                                   std::string(text) + "'");
  }
  return {std::string(Trim(text.substr(0, eq))),
          std::string(Trim(text.substr(eq + 1)))};
}

RunConfig ParseConfigText(std::string_view text,
                          const std::vector<Override>& overrides) {
  RunConfig cfg;
  std::size_t pos = 0;
  int line_no = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no),
                        "expected key = value, got '" + std::string(line) + "'");
    }
    const std::string_view key = Trim(line.substr(0, eq));
    if (key.empty()) {
      throw ConfigError("line " + std::to_string(line_no), "empty key");
    }
    Apply(cfg, key, Trim(line.substr(eq + 1)));
  }
  for (const auto& [key, value] : overrides) Apply(cfg, key, value);
  cfg.Validate();
  return cfg;
}

RunConfig ParseConfigFile(const std::filesystem::path& path,
                          const std::vector<Override>& overrides) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseConfigText(buf.str(), overrides);
}

}  // namespace tqkd::cli
