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

#include "aces/circuit.h"

#include <algorithm>
#include <optional>

#include "absl/container/flat_hash_set.h"
#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "aces/cipher.h"
#include "aces/homomorphic.h"
#include "aces/refresh.h"
#include "json.hpp"

namespace aces {
namespace {

bool IsIdentifier(std::string_view s) {
  if (s.empty() || !(absl::ascii_isalpha(s[0]) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return absl::ascii_isalnum(c) || c == '_';
  });
}

absl::Status LineError(int line, const std::string& what) {
  return absl::InvalidArgumentError(absl::StrCat("line ", line, ": ", what));
}

}  // namespace

absl::StatusOr<Circuit> ParseCircuit(std::string_view text) {
  Circuit circuit;
  absl::flat_hash_set<std::string> wires;
  absl::flat_hash_set<std::string> outs;
  int line_no = 0;
  const std::string source(text);
  for (absl::string_view raw : absl::StrSplit(source, '\n')) {
    ++line_no;
    absl::string_view line = raw.substr(0, raw.find('#'));
    std::vector<std::string> tok =
        absl::StrSplit(line, absl::ByAnyChar(" \t\r"), absl::SkipEmpty());
    if (tok.empty()) continue;
    if (tok[0] == "in" || tok[0] == "out") {
      if (tok.size() < 2) {
        return LineError(line_no, absl::StrCat("'", tok[0], "' needs a name"));
      }
      for (std::size_t i = 1; i < tok.size(); ++i) {
        const std::string& name = tok[i];
        if (!IsIdentifier(name)) {
          return LineError(line_no, absl::StrCat("bad name '", name, "'"));
        }
        if (tok[0] == "in") {
          if (!wires.insert(name).second) {
            return LineError(line_no, absl::StrCat("duplicate name '", name, "'"));
          }
          circuit.inputs.push_back(name);
        } else {
          if (!wires.contains(name)) {
            return LineError(line_no, absl::StrCat("unknown name '", name, "'"));
          }
          if (!outs.insert(name).second) {
            return LineError(line_no,
                             absl::StrCat("duplicate output '", name, "'"));
          }
          circuit.outputs.push_back(name);
        }
      }
      continue;
    }
    if (tok.size() != 5 || tok[1] != "=") {
      return LineError(line_no, "expected '<name> = add|mul <name> <name>'");
    }
    Gate gate;
    gate.out = tok[0];
    gate.lhs = tok[3];
    gate.rhs = tok[4];
    gate.line = line_no;
    if (tok[2] == "add") {
      gate.op = GateOp::kAdd;
    } else if (tok[2] == "mul") {
      gate.op = GateOp::kMul;
    } else {
      return LineError(line_no, absl::StrCat("unknown operation '", tok[2], "'"));
    }
    if (!IsIdentifier(gate.out)) {
      return LineError(line_no, absl::StrCat("bad name '", gate.out, "'"));
    }
    for (const std::string* operand : {&gate.lhs, &gate.rhs}) {
      if (!wires.contains(*operand)) {
        return LineError(line_no, absl::StrCat("unknown name '", *operand, "'"));
      }
    }
    if (!wires.insert(gate.out).second) {
      return LineError(line_no, absl::StrCat("duplicate name '", gate.out, "'"));
    }
    circuit.gates.push_back(std::move(gate));
  }
  if (circuit.outputs.empty()) {
    return absl::InvalidArgumentError(
        absl::StrCat("line ", line_no, ": circuit declares no output"));
  }
  return circuit;
}

absl::StatusOr<RefreshPolicy> ParseRefreshPolicy(std::string_view text) {
  if (text == "auto") return RefreshPolicy::kAuto;
  if (text == "off") return RefreshPolicy::kOff;
  return absl::InvalidArgumentError(
      absl::StrCat("refresh policy must be auto or off, got '",
                   std::string(text), "'"));
}

std::uint64_t RefreshThreshold(const Channel& ch, const Refresher& refresher) {
  std::uint64_t max_level = MaxDecryptableLevel(ch);
  std::uint64_t margin = RefreshedLevel(ch, refresher).value_or(max_level);
  return max_level > margin ? max_level - margin : 0;
}

EvalResult Evaluate(const Circuit& circuit,
                    const std::map<std::string, Ciphertext>& env,
                    const Channel& ch, const PublicMaterial& pub,
                    RefreshPolicy policy, RandomSource& rng) {
  EvalResult result;
  EvalReport& report = result.report;
  std::map<std::string, Ciphertext> wires;
  auto fail = [&](absl::Status s) {
    report.violations.emplace_back(s.message());
    result.status = std::move(s);
    return result;
  };
  for (const std::string& name : circuit.inputs) {
    auto it = env.find(name);
    if (it == env.end()) {
      return fail(absl::InvalidArgumentError(
          absl::StrCat("input '", name, "' is not bound")));
    }
    if (absl::Status s = CheckCiphertextShape(ch, it->second); !s.ok()) {
      return fail(absl::InvalidArgumentError(
          absl::StrCat("input '", name, "': ", s.message())));
    }
    wires[name] = it->second;
  }

  const std::uint64_t threshold = RefreshThreshold(ch, pub.refresher);
  const std::optional<std::uint64_t> floor_level =
      RefreshedLevel(ch, pub.refresher);
  std::optional<LocatorIndex> index;

  for (const Gate& gate : circuit.gates) {
    const LevelOp op = gate.op == GateOp::kAdd ? LevelOp::kAdd : LevelOp::kMul;
    auto next_level = [&] {
      return LevelAfter(op, wires[gate.lhs].level, wires[gate.rhs].level, ch);
    };
    auto too_high = [&](const std::optional<std::uint64_t>& level) {
      return !level.has_value() || *level > threshold;
    };
    std::optional<std::uint64_t> level = next_level();
    if (policy == RefreshPolicy::kAuto && too_high(level) &&
        floor_level.has_value()) {
      std::vector<std::string> order = {gate.lhs};
      if (gate.rhs != gate.lhs) order.push_back(gate.rhs);
      std::stable_sort(order.begin(), order.end(),
                       [&](const std::string& a, const std::string& b) {
                         return wires[a].level > wires[b].level;
                       });
      for (const std::string& wire : order) {
        if (!too_high(level)) break;
        Ciphertext& ct = wires[wire];
        if (ct.level <= *floor_level) continue;
        if (!index.has_value()) index.emplace(ch, pub.db);
        auto refreshed = RefreshWithRetry(ch, pub, *index, ct, rng);
        if (!refreshed.ok()) {
          return fail(absl::FailedPreconditionError(absl::StrCat(
              "line ", gate.line, ": wire '", wire, "' at level ", ct.level,
              " cannot be refreshed before gate '", gate.out,
              "': ", refreshed.status().message())));
        }
        report.refreshes.push_back(RefreshEvent{wire, ct.level,
                                                refreshed->ct.level,
                                                refreshed->rerandomizations});
        ct = std::move(refreshed->ct);
        level = next_level();
      }
    }
    if (!level.has_value() || !IsDecryptable(ch, *level)) {
      return fail(absl::FailedPreconditionError(absl::StrCat(
          "noise budget exceeded: line ", gate.line, ": gate '", gate.out,
          "' (", gate.op == GateOp::kAdd ? "add" : "mul", " of levels ",
          wires[gate.lhs].level, " and ", wires[gate.rhs].level, ")",
          level.has_value() ? " is not decryptable"
                            : " overflows the leveled guard")));
    }
    absl::StatusOr<Ciphertext> out =
        gate.op == GateOp::kAdd
            ? HomAdd(ch, wires[gate.lhs], wires[gate.rhs])
            : HomMul(ch, pub.lambda, wires[gate.lhs], wires[gate.rhs]);
    if (!out.ok()) return fail(out.status());
    wires[gate.out] = *std::move(out);
  }

  for (const std::string& name : circuit.inputs) {
    report.levels.emplace_back(name, wires[name].level);
  }
  for (const Gate& gate : circuit.gates) {
    report.levels.emplace_back(gate.out, wires[gate.out].level);
  }
  for (const std::string& name : circuit.outputs) {
    result.outputs[name] = wires[name];
  }
  return result;
}

std::string SerializeReport(const EvalReport& report, const absl::Status& s) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  j["status"] = s.ok() ? std::string("ok") : std::string(s.message());
  nlohmann::ordered_json levels = nlohmann::ordered_json::object();
  for (const auto& [name, level] : report.levels) levels[name] = level;
  j["levels"] = std::move(levels);
  nlohmann::ordered_json events = nlohmann::ordered_json::array();
  for (const RefreshEvent& e : report.refreshes) {
    events.push_back({{"wire", e.wire},
                      {"pre_level", e.pre_level},
                      {"post_level", e.post_level},
                      {"rerandomizations", e.rerandomizations}});
  }
  j["refreshes"] = std::move(events);
  j["violations"] = report.violations;
  return j.dump() + "\n";
}

}  // namespace aces
