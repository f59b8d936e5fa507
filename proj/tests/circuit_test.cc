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

#include "aces/cipher.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "json.hpp"
#include "test_support.h"

namespace aces {
namespace {

using ::testing::HasSubstr;

TEST(ParseCircuitTest, AcceptsGatesCommentsAndBlankLines) {
  auto c = ParseCircuit(
      "# demo\n"
      "in a b\n"
      "\n"
      "t = mul a b   # product\n"
      "r = add t a\n"
      "out r t\n");
  ASSERT_TRUE(c.ok()) << c.status();
  EXPECT_EQ(c->inputs, (std::vector<std::string>{"a", "b"}));
  ASSERT_EQ(c->gates.size(), 2u);
  EXPECT_EQ(c->gates[0].out, "t");
  EXPECT_EQ(c->gates[0].op, GateOp::kMul);
  EXPECT_EQ(c->gates[0].line, 4);
  EXPECT_EQ(c->gates[1].op, GateOp::kAdd);
  EXPECT_EQ(c->gates[1].lhs, "t");
  EXPECT_EQ(c->gates[1].rhs, "a");
  EXPECT_EQ(c->outputs, (std::vector<std::string>{"r", "t"}));
}

TEST(ParseCircuitTest, InputsMayBeOutputs) {
  auto c = ParseCircuit("in a\nout a\n");
  ASSERT_TRUE(c.ok());
  EXPECT_TRUE(c->gates.empty());
}

struct BadCircuit {
  const char* text;
  const char* message;
};

class ParseCircuitErrorTest : public ::testing::TestWithParam<BadCircuit> {};

TEST_P(ParseCircuitErrorTest, ReportsLine) {
  auto c = ParseCircuit(GetParam().text);
  ASSERT_FALSE(c.ok());
  EXPECT_EQ(c.status().code(), absl::StatusCode::kInvalidArgument);
  EXPECT_EQ(std::string(c.status().message()), GetParam().message);
}

INSTANTIATE_TEST_SUITE_P(
    Cases, ParseCircuitErrorTest,
    ::testing::Values(
        BadCircuit{"in a\nx = add a b\nout x\n", "line 2: unknown name 'b'"},
        BadCircuit{"in a a\nout a\n", "line 1: duplicate name 'a'"},
        BadCircuit{"in a\na = mul a a\nout a\n", "line 2: duplicate name 'a'"},
        BadCircuit{"in a\nx = sub a a\nout x\n",
                   "line 2: unknown operation 'sub'"},
        BadCircuit{"in a\nx = add a\nout x\n",
                   "line 2: expected '<name> = add|mul <name> <name>'"},
        BadCircuit{"in a\nout y\n", "line 2: unknown name 'y'"},
        BadCircuit{"in a\nout a a\n", "line 2: duplicate output 'a'"},
        BadCircuit{"in\n", "line 1: 'in' needs a name"},
        BadCircuit{"in 1a\nout 1a\n", "line 1: bad name '1a'"},
        BadCircuit{"in a\nx = add a a\n",
                   "line 3: circuit declares no output"}));

TEST(RefreshPolicyTest, Parse) {
  EXPECT_EQ(*ParseRefreshPolicy("auto"), RefreshPolicy::kAuto);
  EXPECT_EQ(*ParseRefreshPolicy("off"), RefreshPolicy::kOff);
  EXPECT_FALSE(ParseRefreshPolicy("on").ok());
}

class EvaluateTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    ch_ = new Channel(testing::Desk());
    kb_ = new KeyBundle(testing::MakeBundle(*ch_, 200));
    pub_ = new PublicMaterial(testing::MakePublic(*ch_, *kb_, 201));
  }
  static void TearDownTestSuite() {
    delete pub_;
    delete kb_;
    delete ch_;
  }
  Ciphertext Enc(std::uint64_t m, RandomSource& rng) {
    return *Encrypt(*ch_, kb_->rep, kb_->pk, Residue{m, 2}, rng);
  }
  std::uint64_t Dec(const Ciphertext& ct) {
    return Decrypt(*ch_, kb_->sk, ct)->value;
  }
  static Channel* ch_;
  static KeyBundle* kb_;
  static PublicMaterial* pub_;
};
Channel* EvaluateTest::ch_ = nullptr;
KeyBundle* EvaluateTest::kb_ = nullptr;
PublicMaterial* EvaluateTest::pub_ = nullptr;

TEST_F(EvaluateTest, ThresholdAtDesk) {
  EXPECT_EQ(RefreshThreshold(*ch_, pub_->refresher), 7506u - 60u);
}

TEST_F(EvaluateTest, MulThenAddTruthTable) {
  auto circuit = ParseCircuit("in a b\nt = mul a b\nr = add t a\nout r\n");
  ASSERT_TRUE(circuit.ok());
  RandomSource rng(std::uint64_t{202});
  for (std::uint64_t a = 0; a < 2; ++a) {
    for (std::uint64_t b = 0; b < 2; ++b) {
      std::map<std::string, Ciphertext> env = {{"a", Enc(a, rng)},
                                               {"b", Enc(b, rng)}};
      EvalResult res =
          Evaluate(*circuit, env, *ch_, *pub_, RefreshPolicy::kAuto, rng);
      ASSERT_TRUE(res.status.ok()) << res.status;
      EXPECT_EQ(Dec(res.outputs.at("r")), ((a * b) + a) % 2);
      EXPECT_TRUE(res.report.refreshes.empty());
      ASSERT_EQ(res.report.levels.size(), 4u);
      EXPECT_EQ(res.report.levels[2],
                (std::pair<std::string, std::uint64_t>("t", 48)));
      EXPECT_EQ(res.report.levels[3],
                (std::pair<std::string, std::uint64_t>("r", 52)));
    }
  }
}

constexpr char kChain[] =
    "in a b c d\n"
    "t1 = mul a b\n"
    "t2 = mul t1 t1\n"
    "t3 = mul t2 c\n"
    "t4 = mul t3 d\n"
    "out t4\n";

TEST_F(EvaluateTest, ChainFailsWithoutRefresh) {
  auto circuit = ParseCircuit(kChain);
  ASSERT_TRUE(circuit.ok());
  RandomSource rng(std::uint64_t{203});
  std::map<std::string, Ciphertext> env = {
      {"a", Enc(1, rng)}, {"b", Enc(1, rng)}, {"c", Enc(1, rng)},
      {"d", Enc(1, rng)}};
  EvalResult res =
      Evaluate(*circuit, env, *ch_, *pub_, RefreshPolicy::kOff, rng);
  EXPECT_EQ(res.status.code(), absl::StatusCode::kFailedPrecondition);
  EXPECT_THAT(std::string(res.status.message()),
              HasSubstr("line 4: gate 't3'"));
  EXPECT_THAT(std::string(res.status.message()),
              HasSubstr("levels 4800 and 4"));
  ASSERT_EQ(res.report.violations.size(), 1u);
  EXPECT_TRUE(res.outputs.empty());
}

TEST_F(EvaluateTest, ChainSucceedsWithAutoRefresh) {
  auto circuit = ParseCircuit(kChain);
  ASSERT_TRUE(circuit.ok());
  RandomSource rng(std::uint64_t{204});
  for (int t = 0; t < 8; ++t) {
    std::uint64_t m[4];
    std::map<std::string, Ciphertext> env;
    const char* names[4] = {"a", "b", "c", "d"};
    for (int i = 0; i < 4; ++i) {
      m[i] = rng.Uniform(2);
      env[names[i]] = Enc(m[i], rng);
    }
    EvalResult res =
        Evaluate(*circuit, env, *ch_, *pub_, RefreshPolicy::kAuto, rng);
    ASSERT_TRUE(res.status.ok()) << res.status;
    ASSERT_GE(res.report.refreshes.size(), 1u);
    EXPECT_EQ(res.report.refreshes[0].wire, "t2");
    EXPECT_EQ(res.report.refreshes[0].pre_level, 4800u);
    EXPECT_EQ(res.report.refreshes[0].post_level, 60u);
    EXPECT_EQ(Dec(res.outputs.at("t4")), m[0] & m[1] & m[2] & m[3]);
    for (const auto& [wire, level] : res.report.levels) {
      EXPECT_TRUE(IsDecryptable(*ch_, level)) << wire;
    }
  }
}

TEST_F(EvaluateTest, UnboundAndMalformedInputs) {
  auto circuit = ParseCircuit("in a b\nr = add a b\nout r\n");
  RandomSource rng(std::uint64_t{205});
  std::map<std::string, Ciphertext> env = {{"a", Enc(1, rng)}};
  EvalResult res =
      Evaluate(*circuit, env, *ch_, *pub_, RefreshPolicy::kAuto, rng);
  EXPECT_EQ(res.status.code(), absl::StatusCode::kInvalidArgument);
  EXPECT_THAT(std::string(res.status.message()), HasSubstr("'b'"));
  env["b"] = Enc(0, rng);
  env["b"].c.pop_back();
  res = Evaluate(*circuit, env, *ch_, *pub_, RefreshPolicy::kAuto, rng);
  EXPECT_EQ(res.status.code(), absl::StatusCode::kInvalidArgument);
}

TEST_F(EvaluateTest, ReportJson) {
  auto circuit = ParseCircuit(kChain);
  RandomSource rng(std::uint64_t{206});
  std::map<std::string, Ciphertext> env = {
      {"a", Enc(1, rng)}, {"b", Enc(0, rng)}, {"c", Enc(1, rng)},
      {"d", Enc(1, rng)}};
  EvalResult res =
      Evaluate(*circuit, env, *ch_, *pub_, RefreshPolicy::kAuto, rng);
  ASSERT_TRUE(res.status.ok());
  auto j = nlohmann::json::parse(SerializeReport(res.report, res.status));
  EXPECT_EQ(j["status"], "ok");
  EXPECT_EQ(j["levels"]["t1"], 48);
  EXPECT_EQ(j["refreshes"][0]["wire"], "t2");
  EXPECT_EQ(j["refreshes"][0]["post_level"], 60);
  EXPECT_TRUE(j["violations"].empty());

  auto bad = nlohmann::json::parse(SerializeReport(
      EvalReport{{}, {}, {"boom"}}, absl::FailedPreconditionError("boom")));
  EXPECT_EQ(bad["status"], "boom");
  EXPECT_EQ(bad["violations"][0], "boom");
}

}  // namespace
}  // namespace aces
