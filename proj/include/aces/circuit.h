/*
 * Copyright 2026 The ACES C++ Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Arithmetic circuits over ciphertexts and a noise-aware evaluator.
//
// Text format, one statement per line, '#' starts a comment:
//   in <name> [<name> ...]
//   <name> = add <name> <name>
//   <name> = mul <name> <name>
//   out <name> [<name> ...]

#ifndef ACES_CIRCUIT_H_
#define ACES_CIRCUIT_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "aces/channel.h"
#include "aces/keys.h"

namespace aces {

enum class GateOp { kAdd, kMul };

struct Gate {
  std::string out;
  GateOp op = GateOp::kAdd;
  std::string lhs;
  std::string rhs;
  int line = 0;
};

struct Circuit {
  std::vector<std::string> inputs;
  std::vector<Gate> gates;
  std::vector<std::string> outputs;
};

absl::StatusOr<Circuit> ParseCircuit(std::string_view text);

enum class RefreshPolicy { kAuto, kOff };

absl::StatusOr<RefreshPolicy> ParseRefreshPolicy(std::string_view text);

struct RefreshEvent {
  std::string wire;
  std::uint64_t pre_level = 0;
  std::uint64_t post_level = 0;
  int rerandomizations = 0;
};

struct EvalReport {
  // Final level of every wire, inputs first, then gates in order.
  std::vector<std::pair<std::string, std::uint64_t>> levels;
  std::vector<RefreshEvent> refreshes;
  std::vector<std::string> violations;
};

struct EvalResult {
  absl::Status status;
  std::map<std::string, Ciphertext> outputs;
  EvalReport report;
};

// Gates whose output level would exceed this trigger a refresh under kAuto.
std::uint64_t RefreshThreshold(const Channel& ch, const Refresher& refresher);

EvalResult Evaluate(const Circuit& circuit,
                    const std::map<std::string, Ciphertext>& env,
                    const Channel& ch, const PublicMaterial& pub,
                    RefreshPolicy policy, RandomSource& rng);

std::string SerializeReport(const EvalReport& report, const absl::Status& s);

}  // namespace aces

#endif  // ACES_CIRCUIT_H_
