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

#include "tqkd/cli/acceptance.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <tuple>

#include "tqkd/analysis/curve_io.h"
#include "tqkd/analysis/info_bounds.h"
#include "tqkd/cli/commands.h"
#include "tqkd/protocol/protocol.h"

namespace tqkd::cli {
namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kSuiteSeed = 20260101;

std::string Fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), format, a, b, c);
  return buf;
}

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Criterion body returning (passed, detail).
using Check = std::function<std::pair<bool, std::string>()>;

CriterionResult Run(int id, std::string name, const Check& check) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  const auto start = Clock::now();
  try {
    std::tie(r.passed, r.detail) = check();
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = Seconds(start);
  return r;
}

std::pair<bool, std::string> CriticalBound(const AcceptanceHooks& hooks) {
  const auto start = Clock::now();
  const double value = hooks.critical_info();
  const double elapsed = Seconds(start);
  const bool published = std::fabs(value - 0.6900) <= 5e-4;
  const bool oracle = std::fabs(value - kCriticalInfoReference) <= 1e-6;
  const bool fast = elapsed < 1.0;
  return {published && oracle && fast,
          Fmt("I_E*=%.10f (|-0.6900|<=5e-4, |-oracle %.10f|<=1e-6), %.3g s",
              value, kCriticalInfoReference, elapsed)};
}

std::pair<bool, std::string> Advantage(const AcceptanceHooks& hooks) {
  const double advantage = 1.0 - hooks.critical_info();
  return {advantage >= 0.305 && advantage <= 0.315,
          Fmt("1 - I_E* = %.6f in [0.305, 0.315]", advantage)};
}

std::pair<bool, std::string> CriticalAmplitude(const AcceptanceHooks& hooks) {
  const double mu_star = analysis::CriticalMu(0.5, 0.7);
  bool ok = std::fabs(mu_star - 5.7142857) <= 1e-6;
  const double reference = hooks.critical_info();
  Rng rng(kSuiteSeed);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double eta = 0.01 + 0.98 * rng.Uniform();
    const double t = 0.01 + 0.99 * rng.Uniform();
    const double mu = analysis::CriticalMu(eta, t);
    const double i_e =
        analysis::EveInfo({mu, eta, t}, analysis::kCriticalInfoTolerance).i_e;
    worst = std::max(worst, std::fabs(i_e - reference));
  }
  ok = ok && worst <= 1e-6;
  double lo = 1e300;
  double hi = 0.0;
  for (int i = 0; i <= 600; ++i) {
    const double mu = analysis::CriticalMu(0.2 + 0.001 * i, 0.7);
    lo = std::min(lo, mu);
    hi = std::max(hi, mu);
  }
  ok = ok && lo >= 5.0 && hi <= 15.0;
  return {ok, Fmt("mu*(0.5,0.7)=%.8f, max|I_E(mu*)-I_E*|=%.2e, "
                  "mu* over eta in [0.2,0.8] at t=0.7 spans [%.4f, ",
                  mu_star, worst, lo) +
                  Fmt("%.4f]", hi)};
}

std::pair<bool, std::string> FidelitySeries(const AcceptanceHooks& hooks) {
  const auto& f = hooks.fidelity;
  bool ok = f(0) == 0.5 && f(1) == 0.75 &&
            std::fabs(f(2) - (0.5 + std::sqrt(2.0) / 4.0)) <= 1e-12;
  int first_bad = -1;
  double prev = f(0);
  for (int n = 1; n <= 1000; ++n) {
    const double cur = f(n);
    if (!(cur > prev && cur < 1.0)) {
      first_bad = n;
      break;
    }
    prev = cur;
  }
  ok = ok && first_bad < 0;
  return {ok, Fmt("I(0)=%.17g I(1)=%.17g I(2)=%.17g", f(0), f(1), f(2)) +
                  (first_bad < 0 ? ", increasing and < 1 through n=1000"
                                 : ", monotonicity/bound fails at n=" +
                                       std::to_string(first_bad))};
}

std::pair<bool, std::string> HonestCorrectness() {
  const auto start = Clock::now();
  bool ok = true;
  std::string detail;
  std::uint64_t index = 0;
  for (int n : {2, 3, 5}) {
    for (double c : {0.0, 0.1, 0.5}) {
      SessionConfig cfg;
      cfg.n_angles = n;
      cfg.amode_prob = c;
      cfg.photon_mode = PhotonMode::kIdealSinglePhoton;
      const double q = (1.0 - c) / n;
      cfg.target_key_bits = static_cast<std::uint64_t>(1e4 * q);
      cfg.seed = SessionSeed(kSuiteSeed, index++);
      const Transcript tr = RunSession(cfg, AttackModel::Honest());
      const TranscriptStats s = Summarize(tr);
      bool integrity = true;
      for (const RoundRecord& r : tr.rounds) {
        if (r.mode == Mode::kA && r.matched && r.s == 0) {
          integrity = integrity && r.integrity_ok == true;
        }
      }
      const double sigma = std::sqrt(q * (1.0 - q) / s.rounds);
      const bool rate_ok = std::fabs(s.sift_rate - q) <= 3.0 * sigma;
      const bool this_ok = tr.verdict == Verdict::kAccepted && s.qber == 0.0 &&
                           integrity && rate_ok;
      if (!this_ok) {
        detail += Fmt("[N=%g c=%g sift=%.4f] ", n, c, s.sift_rate);
      }
      ok = ok && this_ok;
    }
  }
  const double elapsed = Seconds(start);
  ok = ok && elapsed < 10.0;
  return {ok, (detail.empty() ? std::string("9 configs Accepted, QBER 0, "
                                            "O_b integrity holds, sift "
                                            "rate within 3 sigma")
                              : "failing: " + detail) +
                  Fmt(", %.2f s", elapsed)};
}

std::pair<bool, std::string> ImpersonationDetection() {
  SessionConfig cfg;
  cfg.n_angles = 2;
  cfg.amode_prob = 0.0;
  cfg.photon_mode = PhotonMode::kIdealSinglePhoton;
  cfg.target_key_bits = 20000;
  cfg.seed = SessionSeed(kSuiteSeed, 100);
  const TranscriptStats s =
      Summarize(RunSession(cfg, AttackModel::Impersonation()));
  const bool qber_ok =
      s.sifted_bits >= 10000 &&
      std::fabs(s.qber - kImpersonationQberReference) <= 0.01;

  constexpr int kSessions = 2000;
  int detected = 0;
  cfg.target_key_bits = 256;
  for (int i = 0; i < kSessions; ++i) {
    cfg.seed = SessionSeed(kSuiteSeed, 1000 + i);
    if (RunSession(cfg, AttackModel::Impersonation()).verdict ==
        Verdict::kHashMismatch) {
      ++detected;
    }
  }
  const double p_detect = static_cast<double>(detected) / kSessions;
  return {qber_ok && p_detect >= 0.999,
          Fmt("QBER=%.4f over %g sifted bits (oracle 0.1875 +/- 0.01), ",
              s.qber, static_cast<double>(s.sifted_bits)) +
              Fmt("hash mismatch in %.4f of %g 256-bit sessions", p_detect,
                  kSessions)};
}

std::pair<bool, std::string> TrojanBehavior() {
  SessionConfig cfg;
  cfg.n_angles = 2;
  cfg.amode_prob = 0.0;
  cfg.bob_tap_transmission = 0.7;
  cfg.photon_mode = PhotonMode::kIdealSinglePhoton;
  cfg.target_key_bits = 10000;
  cfg.seed = SessionSeed(kSuiteSeed, 200);
  const Transcript quiet = RunSession(cfg, AttackModel::TrojanHorse());
  const double read =
      static_cast<double>(quiet.eve.agreeing_bits) / quiet.alice_key_bits.size();
  const bool read_ok = quiet.verdict == Verdict::kAccepted &&
                       std::fabs(read - cfg.bob_tap_transmission) <= 0.02;

  // Detection with authentication rounds enabled.
  SessionConfig live;
  live.n_angles = 2;
  live.amode_prob = 0.1;
  live.bob_tap_transmission = 0.7;
  live.mean_photons = 1.0;
  live.photon_mode = PhotonMode::kCoherent;
  live.target_key_bits = 1'000'000'000;
  live.max_rounds = 10'000'000;
  const double p_round = TrojanViolationProbability(live, 1);
  constexpr int kSessions = 2000;
  double total_rounds = 0.0;
  int failures = 0;
  for (int i = 0; i < kSessions; ++i) {
    live.seed = SessionSeed(kSuiteSeed, 5000 + i);
    const Transcript tr = RunSession(live, AttackModel::TrojanHorse());
    if (tr.verdict == Verdict::kAuthFailure) ++failures;
    total_rounds += static_cast<double>(tr.rounds.size());
  }
  const double mean_rounds = total_rounds / kSessions;
  const double expected = 1.0 / p_round;
  const bool detect_ok = failures == kSessions &&
                         std::fabs(mean_rounds / expected - 1.0) <= 0.10;
  return {read_ok && detect_ok,
          Fmt("c=0: Eve read %.4f of sifted bits (t=%.2f), ", read,
              cfg.bob_tap_transmission) +
              Fmt("c=0.1: mean rounds to AuthFailure %.1f vs closed form "
                  "%.1f over %g sessions",
                  mean_rounds, expected, kSessions)};
}

std::pair<bool, std::string> PnsAccounting() {
  bool means_ok = true;
  double worst = 0.0;
  std::uint64_t index = 300;
  for (double mu : {1.0, 6.0, 12.0}) {
    for (double eta : {0.2, 0.5, 0.9}) {
      SessionConfig cfg;
      cfg.mean_photons = mu;
      cfg.bob_tap_transmission = 0.7;
      cfg.target_key_bits = 64;
      cfg.seed = SessionSeed(kSuiteSeed, index++);
      const Transcript tr = RunSession(cfg, AttackModel::Pns(eta));
      const double rounds = static_cast<double>(tr.rounds.size());
      const double ab = tr.eve.pns_stored_mean_ab / rounds;
      const double ba = tr.eve.pns_stored_mean_ba / rounds;
      const double want_ab = (1.0 - eta) * mu;
      const double want_ba = (1.0 - eta) * eta * 0.7 * mu;
      const double err = std::max(std::fabs(ab - want_ab) / want_ab,
                                  std::fabs(ba - want_ba) / want_ba);
      worst = std::max(worst, err);
      means_ok = means_ok && err <= 1e-9;
    }
  }
  bool order_ok = true;
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) {
      for (double t : {0.5, 0.7, 0.9}) {
        const double mu = 0.5 + 3.0 * i;
        const double eta = 0.05 + 0.1 * j;
        const auto r = analysis::EveInfo({mu, eta, t}, 1e-10);
        order_ok = order_ok && r.i_ba <= r.i_ab && r.i_e == r.i_ba;
      }
    }
  }
  return {means_ok && order_ok,
          Fmt("stored means per leg match (1-eta)mu and (1-eta)eta t mu "
              "(max rel err %.1e); I_BA <= I_AB on 300 grid points: ",
              worst) +
              (order_ok ? "yes" : "no")};
}

std::pair<bool, std::string> CurveReproduction() {
  const auto start = Clock::now();
  RunConfig cfg;
  const OutputFiles files = AnalyzeOutputs(cfg);
  std::map<std::string, std::string> by_name(files.begin(), files.end());
  bool ok = true;
  int curves = 0;
  for (const double t : {0.7, 0.9}) {
    const auto points =
        analysis::ParseCurvesCsv(by_name.at(analysis::CurveFileName(t)));
    const auto notes = analysis::ParseAnnotationsCsv(
        by_name.at(analysis::AnnotationFileName(t)));
    for (const auto& note : notes) {
      ++curves;
      double prev = -1.0;
      bool first = true;
      bool crossed = false;
      for (const auto& p : points) {
        if (p.eta != note.eta) continue;
        if (first) ok = ok && p.mu == 0.0 && p.i_e == 0.5;
        first = false;
        ok = ok && p.i_e >= prev;
        prev = p.i_e;
        if (p.is_critical) {
          crossed = std::fabs(p.mu - note.mu_star) <= 1e-6 * note.mu_star &&
                    std::fabs(p.i_e - 0.6900) <= 5e-4;
        }
      }
      ok = ok && !first && crossed && std::fabs(note.i_e_star - 0.69) <= 5e-4;
    }
  }
  const double elapsed = Seconds(start);
  ok = ok && curves == 18 && elapsed < 5.0;
  return {ok, Fmt("%g curves for t in {0.7, 0.9}: monotone, start at 0.5, "
                  "cross 0.6900 at mu*; %.2f s",
                  curves, elapsed)};
}

std::pair<bool, std::string> Determinism() {
  bool ok = true;
  for (const char* attack : {"honest", "pns", "impersonation", "trojan"}) {
    RunConfig cfg = ParseConfigText(std::string("attack=") + attack +
                                    "\nkey_bits=128\nseed=77\n");
    ok = ok && SimulateOutputs(cfg) == SimulateOutputs(cfg);
  }
  RunConfig sweep = ParseConfigText("mu_points=41\nmu_max=10\n");
  ok = ok && AnalyzeOutputs(sweep) == AnalyzeOutputs(sweep);
  return {ok, ok ? "simulate (4 attack models) and analyze outputs are "
                   "byte-identical across reruns"
                 : "outputs differ between identical runs"};
}

}  // namespace

AcceptanceHooks AcceptanceHooks::Default() {
  return {analysis::FidelityBound, analysis::CriticalInfo};
}

std::vector<CriterionResult> RunAcceptance(const AcceptanceHooks& hooks) {
  std::vector<CriterionResult> results;
  results.push_back(Run(1, "Critical information bound",
                        [&] { return CriticalBound(hooks); }));
  results.push_back(
      Run(2, "Advantage claim", [&] { return Advantage(hooks); }));
  results.push_back(Run(3, "Critical amplitude",
                        [&] { return CriticalAmplitude(hooks); }));
  results.push_back(
      Run(4, "Fidelity series", [&] { return FidelitySeries(hooks); }));
  results.push_back(
      Run(5, "Honest protocol correctness", HonestCorrectness));
  results.push_back(Run(6, "Impersonation detection", ImpersonationDetection));
  results.push_back(Run(7, "Trojan-horse behavior", TrojanBehavior));
  results.push_back(Run(8, "PNS accounting", PnsAccounting));
  results.push_back(Run(9, "I_E(mu) curve reproduction", CurveReproduction));
  results.push_back(Run(10, "Determinism", Determinism));
  return results;
}

std::string FormatCriterion(const CriterionResult& r) {
  char head[96];
  std::snprintf(head, sizeof(head), "[%s] %d %s (%.2f s): ",
                r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds);
  return head + r.detail;
}

}  // namespace tqkd::cli
