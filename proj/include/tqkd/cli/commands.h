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

#ifndef TQKD_CLI_COMMANDS_H_
#define TQKD_CLI_COMMANDS_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "tqkd/cli/run_config.h"
#include "tqkd/protocol/protocol.h"

namespace tqkd::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitAttackDetected = 1,  // also any session that did not reach Accepted
  kExitUsage = 2,
  kExitIo = 3,
};

struct CommandOptions {
  std::optional<std::filesystem::path> config_path;
  std::filesystem::path output_dir = "out";
  std::vector<Override> overrides;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> attack;
  bool quiet = false;
};

// Ordered (file name, contents) pairs produced by a command.
using OutputFiles = std::vector<std::pair<std::string, std::string>>;

// Config file (if any), then --set overrides, then --attack and --seed.
RunConfig ResolveConfig(const CommandOptions& options);

// transcript.txt and summary.txt for one session.
OutputFiles SimulateOutputs(const RunConfig& cfg, Transcript* transcript = nullptr);
// curves_t{t}.csv and annotations_t{t}.csv per t, then summary.txt.
OutputFiles AnalyzeOutputs(const RunConfig& cfg);

// Creates `dir` if needed. Throws IoError.
void WriteOutputs(const std::filesystem::path& dir, const OutputFiles& files);

int ExitCodeFor(Verdict verdict);

int RunSimulate(const CommandOptions& options, std::ostream& out,
                std::ostream& err);
int RunAnalyze(const CommandOptions& options, std::ostream& out,
               std::ostream& err);
// Reads a transcript (default <out>/transcript.txt) and prints its summary.
int RunReport(const CommandOptions& options,
              const std::optional<std::filesystem::path>& transcript,
              std::ostream& out, std::ostream& err);
int RunSelfcheck(std::ostream& out);

}  // namespace tqkd::cli

#endif  // TQKD_CLI_COMMANDS_H_
