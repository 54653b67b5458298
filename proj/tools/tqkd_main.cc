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

// tqkd: simulate, analyze and self-check the two-way randomly polarized
// coherent-state key distribution protocol.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tqkd/cli/commands.h"
#include "tqkd/protocol/session_config.h"

namespace {

void AddCommonOptions(CLI::App* cmd, tqkd::cli::CommandOptions& opts,
                      std::vector<std::string>& sets,
                      std::optional<std::uint64_t>& seed,
                      std::optional<std::string>& attack) {
  cmd->add_option("--config", opts.config_path, "key = value config file");
  cmd->add_option("--out", opts.output_dir, "output directory")
      ->capture_default_str();
  cmd->add_option("--set", sets, "KEY=VALUE override (repeatable)");
  cmd->add_option("--seed", seed, "64-bit seed override");
  cmd->add_option("--attack", attack, "adversary model")
      ->check(CLI::IsMember({"honest", "pns", "impersonation", "trojan"}));
  cmd->add_flag("--quiet", opts.quiet, "suppress the summary on stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-way randomly polarized QKD simulator and analyzer"};
  app.require_subcommand(1);

  tqkd::cli::CommandOptions opts;
  std::vector<std::string> sets;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> attack;
  std::optional<std::string> transcript;

  auto* simulate = app.add_subcommand("simulate", "run one protocol session");
  AddCommonOptions(simulate, opts, sets, seed, attack);
  auto* analyze =
      app.add_subcommand("analyze", "write I_E(mu) curves and mu* annotations");
  AddCommonOptions(analyze, opts, sets, seed, attack);
  auto* report =
      app.add_subcommand("report", "summarize an existing transcript");
  AddCommonOptions(report, opts, sets, seed, attack);
  report->add_option("transcript", transcript,
                     "transcript file (default <out>/transcript.txt)");
  auto* selfcheck =
      app.add_subcommand("selfcheck", "run the embedded acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : tqkd::cli::kExitUsage;
  }

  try {
    for (const std::string& s : sets) {
      opts.overrides.push_back(tqkd::cli::ParseOverride(s));
    }
  } catch (const tqkd::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return tqkd::cli::kExitUsage;
  }
  opts.seed = seed;
  opts.attack = attack;

  if (*simulate) return tqkd::cli::RunSimulate(opts, std::cout, std::cerr);
  if (*analyze) return tqkd::cli::RunAnalyze(opts, std::cout, std::cerr);
  if (*report) {
    std::optional<std::filesystem::path> path;
    if (transcript) path = *transcript;
    return tqkd::cli::RunReport(opts, path, std::cout, std::cerr);
  }
  if (*selfcheck) return tqkd::cli::RunSelfcheck(std::cout);
  return tqkd::cli::kExitUsage;
}
