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

#ifndef TQKD_PROTOCOL_TRANSCRIPT_IO_H_
#define TQKD_PROTOCOL_TRANSCRIPT_IO_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "tqkd/protocol/protocol.h"

namespace tqkd {

// Transcript file layout (line oriented, '\n' endings):
//
//   # tqkd-transcript 1
//   # config <FormatSessionConfig> <FormatAttackModel>
//   round,mode,theta,s,theta_star,alpha_a,alpha_b,k,o_a,o_b,matched,sifted,integrity_ok,flags
//   <one record per round>
//   # verdict=<Accepted|HashMismatch|AuthFailure|Aborted>
//   # key_alice=<bits>
//   # key_bob=<bits>
//   # hash_alice=<16 hex digits>
//   # hash_bob=<16 hex digits>
//   # eve decoded_bits=.. agreeing_bits=.. exposed_rounds=.. pns_stored_mean_ab=.. pns_stored_mean_ba=..
//
// Record columns:
//   mode         A or T
//   theta        radians, shortest round-trip decimal
//   theta_star   radians, or '-' in T-mode
//   o_a, o_b     <label>:<clicks D0>:<clicks D1>, label in {0, 1, E, A}
//   matched, sifted  0 or 1
//   integrity_ok 0, 1, or '-' when not verified
//   flags        '|'-joined subset of alice_empty, alice_ambiguous,
//                bob_ambiguous, integrity_violation; '-' when none
//
// Empty key bit strings are written as '-'.
inline constexpr std::string_view kTranscriptColumns =
    "round,mode,theta,s,theta_star,alpha_a,alpha_b,k,o_a,o_b,matched,sifted,"
    "integrity_ok,flags";

class TranscriptParseError : public std::runtime_error {
 public:
  TranscriptParseError(std::size_t line, const std::string& message)
      : std::runtime_error("transcript line " + std::to_string(line) + ": " +
                           message) {}
};

std::string FormatTranscript(const Transcript& transcript);
Transcript ParseTranscript(std::string_view text);

// Human-readable `key=value` summary block: verdict, QBER, sift rate,
// anomaly counts and Eve's statistics.
std::string FormatSummary(const Transcript& transcript);

}  // namespace tqkd

#endif  // TQKD_PROTOCOL_TRANSCRIPT_IO_H_
