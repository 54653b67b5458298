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

#include "tqkd/cli/commands.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include "tqkd/analysis/curve_io.h"
#include "tqkd/analysis/info_bounds.h"
#include "tqkd/cli/acceptance.h"
#include "tqkd/protocol/transcript_io.h"

namespace tqkd::cli {
namespace {

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

RunConfig ResolveConfig(const CommandOptions& options) {
  std::vector<Override> overrides = options.overrides;
  if (options.attack) overrides.emplace_back("attack", *options.attack);
  if (options.seed) overrides.emplace_back("seed", std::to_string(*options.seed));
  if (options.config_path) {
    return ParseConfigFile(*options.config_path, overrides);
  }
  return ParseConfigText("", overrides);
}

OutputFiles SimulateOutputs(const RunConfig& cfg, Transcript* transcript) {
  Transcript tr = RunSession(cfg.session, cfg.attack);
  OutputFiles files;
  files.emplace_back("transcript.txt", FormatTranscript(tr));
  files.emplace_back("summary.txt", FormatSummary(tr));
  if (transcript) *transcript = std::move(tr);
  return files;
}

OutputFiles AnalyzeOutputs(const RunConfig& cfg) {
  const SweepSpec& sweep = cfg.sweep;
  const std::vector<double> grid =
      analysis::LinearGrid(sweep.mu_min, sweep.mu_max, sweep.mu_points);
  OutputFiles files;
  std::string summary;
  char buf[128];
  std::snprintf(buf, sizeof(buf), "critical_info=%.9f\n",
                analysis::CriticalInfo());
  summary += buf;
  for (const double t : sweep.t_values) {
    const auto points = analysis::SweepCurve(grid, sweep.etas, t, sweep.tol);
    const auto notes = analysis::AnnotateCurves(sweep.etas, t, sweep.tol);
    files.emplace_back(analysis::CurveFileName(t),
                       analysis::FormatCurvesCsv(points));
    files.emplace_back(analysis::AnnotationFileName(t),
                       analysis::FormatAnnotationsCsv(notes));
    double lo = notes.front().mu_star;
    double hi = lo;
    for (const auto& a : notes) {
      lo = std::min(lo, a.mu_star);
      hi = std::max(hi, a.mu_star);
    }
    std::snprintf(buf, sizeof(buf), "t=%.9g curves=%zu mu_star_min=%.9g "
                  "mu_star_max=%.9g\n", t, notes.size(), lo, hi);
    summary += buf;
  }
  files.emplace_back("summary.txt", summary);
  return files;
}

void WriteOutputs(const std::filesystem::path& dir, const OutputFiles& files) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  for (const auto& [name, contents] : files) {
    const std::filesystem::path path = dir / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << contents;
    if (!out) throw IoError("cannot write " + path.string());
  }
}

int ExitCodeFor(Verdict verdict) {
  return verdict == Verdict::kAccepted ? kExitOk : kExitAttackDetected;
}

template <typename Body>
int Guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const TranscriptParseError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kExitIo;
  }
}

int RunSimulate(const CommandOptions& options, std::ostream& out,
                std::ostream& err) {
  return Guarded(err, [&] {
    const RunConfig cfg = ResolveConfig(options);
    Transcript tr;
    const OutputFiles files = SimulateOutputs(cfg, &tr);
    WriteOutputs(options.output_dir, files);
    if (!options.quiet) out << files.back().second;
    return ExitCodeFor(tr.verdict);
  });
}

int RunAnalyze(const CommandOptions& options, std::ostream& out,
               std::ostream& err) {
  return Guarded(err, [&] {
    const RunConfig cfg = ResolveConfig(options);
    const OutputFiles files = AnalyzeOutputs(cfg);
    WriteOutputs(options.output_dir, files);
    if (!options.quiet) {
      out << files.back().second;
      for (const auto& [name, contents] : files) {
        out << "wrote " << (options.output_dir / name).string() << "\n";
      }
    }
    return kExitOk;
  });
}

int RunReport(const CommandOptions& options,
              const std::optional<std::filesystem::path>& transcript,
              std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    const std::filesystem::path path =
        transcript.value_or(options.output_dir / "transcript.txt");
    const Transcript tr = ParseTranscript(ReadFile(path));
    if (!options.quiet) out << FormatSummary(tr);
    return ExitCodeFor(tr.verdict);
  });
}

int RunSelfcheck(std::ostream& out) {
  bool all = true;
  for (const CriterionResult& r : RunAcceptance()) {
    out << FormatCriterion(r) << "\n";
    all = all && r.passed;
  }
  out << (all ? "selfcheck: all criteria passed" : "selfcheck: FAILED") << "\n";
  return all ? kExitOk : kExitAttackDetected;
}

}  // namespace tqkd::cli
