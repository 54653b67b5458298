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

#include "tqkd/protocol/transcript_io.h"

#include <charconv>
#include <cinttypes>
#include <cstdio>
#include <string>
#include <vector>

namespace tqkd {
namespace {

constexpr std::string_view kMagic = "# tqkd-transcript 1";

struct FlagName {
  AnomalyFlag flag;
  std::string_view name;
};
constexpr FlagName kFlagNames[] = {
    {kAliceEmpty, "alice_empty"},
    {kAliceAmbiguous, "alice_ambiguous"},
    {kBobTapAmbiguous, "bob_ambiguous"},
    {kIntegrityViolation, "integrity_violation"},
};

std::vector<std::string_view> Split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string FormatOutcome(const MeasurementOutcome& o) {
  return o.KindLabel() + ":" + std::to_string(o.clicks_d0()) + ":" +
         std::to_string(o.clicks_d1());
}

std::string Hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016" PRIx64, v);
  return buf;
}

std::string FormatFlags(std::uint32_t flags) {
  std::string out;
  for (const FlagName& f : kFlagNames) {
    if (flags & f.flag) {
      if (!out.empty()) out += '|';
      out += f.name;
    }
  }
  return out.empty() ? "-" : out;
}

class LineParser {
 public:
  explicit LineParser(std::size_t line) : line_(line) {}

  [[noreturn]] void Fail(const std::string& message) const {
    throw TranscriptParseError(line_, message);
  }

  template <typename F>
  auto Guard(F&& f) const {
    try {
      return f();
    } catch (const ConfigError& e) {
      Fail(e.what());
    }
  }

  double Double(std::string_view field) const {
    return Guard([&] { return ParseDouble("field", field); });
  }
  std::uint64_t U64(std::string_view field) const {
    return Guard([&] { return ParseU64("field", field); });
  }
  int Int(std::string_view field) const {
    return Guard([&] { return ParseInt("field", field); });
  }
  bool Bool(std::string_view field) const {
    if (field == "0") return false;
    if (field == "1") return true;
    Fail("expected 0 or 1, got '" + std::string(field) + "'");
  }

  MeasurementOutcome Outcome(std::string_view field) const {
    const auto parts = Split(field, ':');
    if (parts.size() != 3) Fail("bad outcome '" + std::string(field) + "'");
    const MeasurementOutcome o =
        MeasurementOutcome::FromClicks(U64(parts[1]), U64(parts[2]));
    if (o.KindLabel() != parts[0]) {
      Fail("outcome label disagrees with clicks in '" + std::string(field) +
           "'");
    }
    return o;
  }

  std::uint32_t Flags(std::string_view field) const {
    if (field == "-") return 0;
    std::uint32_t flags = 0;
    for (std::string_view name : Split(field, '|')) {
      bool known = false;
      for (const FlagName& f : kFlagNames) {
        if (f.name == name) {
          flags |= f.flag;
          known = true;
        }
      }
      if (!known) Fail("unknown flag '" + std::string(name) + "'");
    }
    return flags;
  }

 private:
  std::size_t line_;
};

RoundRecord ParseRecord(std::string_view line, const LineParser& p) {
  const auto f = Split(line, ',');
  if (f.size() != 14) p.Fail("expected 14 columns");
  RoundRecord r;
  r.index = p.U64(f[0]);
  if (f[1] == "A") {
    r.mode = Mode::kA;
  } else if (f[1] == "T") {
    r.mode = Mode::kT;
  } else {
    p.Fail("bad mode '" + std::string(f[1]) + "'");
  }
  r.theta = Angle(p.Double(f[2]));
  r.s = p.Bool(f[3]) ? 1 : 0;
  if (f[4] != "-") r.theta_star = Angle(p.Double(f[4]));
  r.alpha_a_index = p.Int(f[5]);
  r.alpha_b_index = p.Int(f[6]);
  r.key_bit = p.Bool(f[7]) ? 1 : 0;
  r.outcome_alice = p.Outcome(f[8]);
  r.outcome_bob_tap = p.Outcome(f[9]);
  r.matched = p.Bool(f[10]);
  r.sifted = p.Bool(f[11]);
  if (f[12] != "-") r.integrity_ok = p.Bool(f[12]);
  r.anomaly_flags = p.Flags(f[13]);
  return r;
}

}  // namespace

std::string FormatTranscript(const Transcript& tr) {
  std::string out;
  out.reserve(96 * (tr.rounds.size() + 8) + 2 * tr.alice_key_bits.size());
  out += kMagic;
  out += "\n# config ";
  out += FormatSessionConfig(tr.config);
  out += ' ';
  out += FormatAttackModel(tr.attack);
  out += '\n';
  out += kTranscriptColumns;
  out += '\n';
  for (const RoundRecord& r : tr.rounds) {
    out += std::to_string(r.index);
    out += r.mode == Mode::kA ? ",A," : ",T,";
    out += FormatDouble(r.theta.radians());
    out += r.s ? ",1," : ",0,";
    out += r.theta_star ? FormatDouble(r.theta_star->radians()) : "-";
    out += ',' + std::to_string(r.alpha_a_index);
    out += ',' + std::to_string(r.alpha_b_index);
    out += r.key_bit ? ",1," : ",0,";
    out += FormatOutcome(r.outcome_alice);
    out += ',';
    out += FormatOutcome(r.outcome_bob_tap);
    out += r.matched ? ",1" : ",0";
    out += r.sifted ? ",1," : ",0,";
    out += r.integrity_ok ? (*r.integrity_ok ? "1" : "0") : "-";
    out += ',';
    out += FormatFlags(r.anomaly_flags);
    out += '\n';
  }
  auto bits = [](const std::string& b) { return b.empty() ? "-" : b; };
  out += "# verdict=" + std::string(VerdictName(tr.verdict)) + "\n";
  out += "# key_alice=" + bits(tr.alice_key_bits) + "\n";
  out += "# key_bob=" + bits(tr.bob_key_bits) + "\n";
  out += "# hash_alice=" + Hex64(tr.hash_alice) + "\n";
  out += "# hash_bob=" + Hex64(tr.hash_bob) + "\n";
  out += "# eve decoded_bits=" + std::to_string(tr.eve.decoded_bits) +
         " agreeing_bits=" + std::to_string(tr.eve.agreeing_bits) +
         " exposed_rounds=" + std::to_string(tr.eve.exposed_rounds) +
         " pns_stored_mean_ab=" + FormatDouble(tr.eve.pns_stored_mean_ab) +
         " pns_stored_mean_ba=" + FormatDouble(tr.eve.pns_stored_mean_ba) +
         "\n";
  return out;
}

Transcript ParseTranscript(std::string_view text) {
  Transcript tr;
  std::vector<std::string_view> lines = Split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.size() < 3 || lines[0] != kMagic) {
    throw TranscriptParseError(1, "missing transcript header");
  }
  bool seen_verdict = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string_view line = lines[i];
    const LineParser p(i + 1);
    if (line == kTranscriptColumns) continue;
    if (!line.starts_with("# ")) {
      tr.rounds.push_back(ParseRecord(line, p));
      continue;
    }
    std::string_view body = line.substr(2);
    std::string_view section;
    if (body.starts_with("config ")) {
      section = "config";
      body.remove_prefix(7);
    } else if (body.starts_with("eve ")) {
      section = "eve";
      body.remove_prefix(4);
    }
    for (std::string_view kv : Split(body, ' ')) {
      const std::size_t eq = kv.find('=');
      if (eq == std::string_view::npos) p.Fail("expected key=value");
      const std::string_view key = kv.substr(0, eq);
      const std::string_view value = kv.substr(eq + 1);
      if (section == "config") {
        const bool known = p.Guard([&] {
          return ApplySessionSetting(tr.config, key, value) ||
                 ApplyAttackSetting(tr.attack, key, value);
        });
        if (!known) p.Fail("unknown config key '" + std::string(key) + "'");
      } else if (section == "eve") {
        if (key == "decoded_bits") {
          tr.eve.decoded_bits = p.U64(value);
        } else if (key == "agreeing_bits") {
          tr.eve.agreeing_bits = p.U64(value);
        } else if (key == "exposed_rounds") {
          tr.eve.exposed_rounds = p.U64(value);
        } else if (key == "pns_stored_mean_ab") {
          tr.eve.pns_stored_mean_ab = p.Double(value);
        } else if (key == "pns_stored_mean_ba") {
          tr.eve.pns_stored_mean_ba = p.Double(value);
        } else {
          p.Fail("unknown eve key '" + std::string(key) + "'");
        }
      } else if (key == "verdict") {
        seen_verdict = true;
        bool ok = false;
        for (Verdict v : {Verdict::kAccepted, Verdict::kHashMismatch,
                          Verdict::kAuthFailure, Verdict::kAborted}) {
          if (VerdictName(v) == value) {
            tr.verdict = v;
            ok = true;
          }
        }
        if (!ok) p.Fail("unknown verdict '" + std::string(value) + "'");
      } else if (key == "key_alice" || key == "key_bob") {
        std::string bits = value == "-" ? "" : std::string(value);
        if (bits.find_first_not_of("01") != std::string::npos) {
          p.Fail("key bits must be 0/1");
        }
        (key == "key_alice" ? tr.alice_key_bits : tr.bob_key_bits) = bits;
      } else if (key == "hash_alice" || key == "hash_bob") {
        std::uint64_t h = 0;
        const auto [ptr, ec] = std::from_chars(
            value.data(), value.data() + value.size(), h, 16);
        if (ec != std::errc() || ptr != value.data() + value.size()) {
          p.Fail("bad hash '" + std::string(value) + "'");
        }
        (key == "hash_alice" ? tr.hash_alice : tr.hash_bob) = h;
      } else {
        p.Fail("unknown key '" + std::string(key) + "'");
      }
    }
  }
  if (!seen_verdict) throw TranscriptParseError(lines.size(), "no verdict");
  tr.eve.kind = tr.attack.kind;
  return tr;
}

std::string FormatSummary(const Transcript& tr) {
  const TranscriptStats s = Summarize(tr);
  char buf[64];
  auto fixed = [&buf](double v) {
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return std::string(buf);
  };
  std::string out;
  auto line = [&out](std::string_view key, const std::string& value) {
    out += key;
    out += '=';
    out += value;
    out += '\n';
  };
  line("verdict", std::string(VerdictName(tr.verdict)));
  line("attack", std::string(AttackName(tr.attack.kind)));
  line("photon_mode", std::string(PhotonModeName(tr.config.photon_mode)));
  line("rounds", std::to_string(s.rounds));
  line("sifted_bits", std::to_string(s.sifted_bits));
  line("key_errors", std::to_string(s.key_errors));
  line("qber", fixed(s.qber));
  line("sift_rate", fixed(s.sift_rate));
  line("amode_rounds", std::to_string(s.amode_rounds));
  line("amode_verified", std::to_string(s.amode_verified));
  line("integrity_failures", std::to_string(s.integrity_failures));
  line("alice_empty", std::to_string(s.alice_empty));
  line("alice_ambiguous", std::to_string(s.alice_ambiguous));
  line("bob_ambiguous", std::to_string(s.bob_tap_ambiguous));
  line("hash_alice", Hex64(tr.hash_alice));
  line("hash_bob", Hex64(tr.hash_bob));
  line("eve_decoded_bits", std::to_string(tr.eve.decoded_bits));
  line("eve_agreeing_bits", std::to_string(tr.eve.agreeing_bits));
  line("eve_read_fraction",
       fixed(s.sifted_bits ? static_cast<double>(tr.eve.agreeing_bits) /
                                 s.sifted_bits
                           : 0.0));
  line("eve_exposed_rounds", std::to_string(tr.eve.exposed_rounds));
  line("pns_stored_mean_ab", fixed(tr.eve.pns_stored_mean_ab));
  line("pns_stored_mean_ba", fixed(tr.eve.pns_stored_mean_ba));
  return out;
}

}  // namespace tqkd
