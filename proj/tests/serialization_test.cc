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

#include "aces/serialization.h"

#include <cstdio>
#include <filesystem>

#include "aces/cipher.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "json.hpp"
#include "test_support.h"

namespace aces {
namespace {

using ::testing::HasSubstr;

TEST(ChannelJsonTest, RoundTrip) {
  for (const ArithmeticChannel& params : {DeskParameters(), MicroParameters()}) {
    std::string text = SerializeChannel(params);
    auto back = ParseChannel(text);
    ASSERT_TRUE(back.ok()) << back.status();
    EXPECT_EQ(*back, params);
    EXPECT_EQ(SerializeChannel(*back), text);
  }
}

TEST(ChannelJsonTest, KnownEncoding) {
  auto j = nlohmann::json::parse(SerializeChannel(DeskParameters()));
  EXPECT_EQ(j["q"], "15015");
  EXPECT_EQ(j["u"], nlohmann::json::parse(R"(["-1","0","0","0","1"])"));
}

TEST(ChannelJsonTest, Errors) {
  EXPECT_THAT(std::string(ParseChannel("{").status().message()),
              HasSubstr("malformed JSON"));
  EXPECT_THAT(std::string(ParseChannel("{}").status().message()),
              HasSubstr("missing field \"p\""));
  auto j = nlohmann::json::parse(SerializeChannel(DeskParameters()));
  j["q"] = "-5";
  EXPECT_EQ(ParseChannel(j.dump()).status().code(),
            absl::StatusCode::kInvalidArgument);
  j["q"] = "abc";
  EXPECT_FALSE(ParseChannel(j.dump()).ok());
  j["q"] = 15015;
  EXPECT_TRUE(ParseChannel(j.dump()).ok());
  j["u"] = "X^4-1";
  EXPECT_THAT(std::string(ParseChannel(j.dump()).status().message()),
              HasSubstr("u: expected array"));
}

class KeyJsonTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    ch_ = new Channel(testing::Desk());
    kb_ = new KeyBundle(testing::MakeBundle(*ch_, 400));
    pub_ = new PublicMaterial(testing::MakePublic(*ch_, *kb_, 401));
  }
  static void TearDownTestSuite() {
    delete pub_;
    delete kb_;
    delete ch_;
  }
  static Channel* ch_;
  static KeyBundle* kb_;
  static PublicMaterial* pub_;
};
Channel* KeyJsonTest::ch_ = nullptr;
KeyBundle* KeyJsonTest::kb_ = nullptr;
PublicMaterial* KeyJsonTest::pub_ = nullptr;

TEST_F(KeyJsonTest, CiphertextRoundTrip) {
  RandomSource rng(std::uint64_t{402});
  for (int t = 0; t < 20; ++t) {
    auto ct = Encrypt(*ch_, kb_->rep, kb_->pk, Residue{t % 2u, 2}, rng);
    std::string text = SerializeCiphertext(*ct);
    auto back = ParseCiphertext(text);
    ASSERT_TRUE(back.ok()) << back.status();
    EXPECT_EQ(*back, *ct);
    EXPECT_EQ(SerializeCiphertext(*back), text);
    EXPECT_EQ(nlohmann::json::parse(text)["level"], 4);
  }
}

TEST_F(KeyJsonTest, SecretRoundTrip) {
  std::string text = SerializeSecretKey(kb_->sk);
  auto back = ParseSecretKey(text, *ch_);
  ASSERT_TRUE(back.ok()) << back.status();
  EXPECT_EQ(*back, kb_->sk);
  Channel micro = testing::Micro();
  EXPECT_FALSE(ParseSecretKey(text, micro).ok());
}

TEST_F(KeyJsonTest, PublicMaterialRoundTrip) {
  std::string text = SerializePublicMaterial(*pub_);
  auto back = ParsePublicMaterial(text, *ch_);
  ASSERT_TRUE(back.ok()) << back.status();
  EXPECT_EQ(*back, *pub_);
  EXPECT_EQ(SerializePublicMaterial(*back), text);
}

TEST_F(KeyJsonTest, LocatorDbRoundTrip) {
  std::string text = SerializeLocatorDb(pub_->db);
  auto back = ParseLocatorDb(text, *ch_);
  ASSERT_TRUE(back.ok()) << back.status();
  EXPECT_EQ(*back, pub_->db);
}

TEST_F(KeyJsonTest, PublicMaterialRejectsTampering) {
  auto base = nlohmann::ordered_json::parse(SerializePublicMaterial(*pub_));
  auto expect_error = [&](nlohmann::ordered_json j, const char* needle) {
    auto parsed = ParsePublicMaterial(j.dump(), *ch_);
    ASSERT_FALSE(parsed.ok());
    EXPECT_EQ(parsed.status().code(), absl::StatusCode::kInvalidArgument);
    EXPECT_THAT(std::string(parsed.status().message()), HasSubstr(needle));
  };
  auto j = base;
  j.erase("lambda");
  expect_error(j, "missing field \"lambda\"");
  j = base;
  j["lambda"][0].erase(0);
  expect_error(j, "lambda: wrong shape");
  j = base;
  j["lambda"][0][0][0] = "15015";
  expect_error(j, "lambda: entry not below q");
  j = base;
  j["f0"][0][0][0] = "15015";
  expect_error(j, "f0: not a canonical ring element");
  j = base;
  j["fprime"].erase(0);
  expect_error(j, "row count differs from N");
  j = base;
  j["sigma"].erase(0);
  expect_error(j, "sigma: length differs from n");
  j = base;
  j["locator_db"][0]["kind"] = "other";
  expect_error(j, "kind must be locator or director");
  j = base;
  j["locator_db"][0]["vec"].erase(0);
  expect_error(j, "vector length differs from n");
}

TEST_F(KeyJsonTest, CiphertextErrors) {
  EXPECT_FALSE(ParseCiphertext("[]").ok());
  EXPECT_FALSE(ParseCiphertext(R"({"c":[],"cprime":["1"]})").ok());
  auto ct = ParseCiphertext(R"({"c":[["1","2"]],"cprime":["1"],"level":3})");
  ASSERT_TRUE(ct.ok());
  // Structurally valid, but not a desk ciphertext.
  EXPECT_FALSE(CheckCiphertextShape(*ch_, *ct).ok());
}

TEST(FileTest, WriteThenRead) {
  std::string path =
      (std::filesystem::temp_directory_path() / "aces_file_test.json").string();
  ASSERT_TRUE(WriteFile(path, "{\"a\":1}\n").ok());
  auto text = ReadFile(path);
  ASSERT_TRUE(text.ok());
  EXPECT_EQ(*text, "{\"a\":1}\n");
  std::remove(path.c_str());
  EXPECT_EQ(ReadFile(path).status().code(), absl::StatusCode::kNotFound);
  EXPECT_FALSE(WriteFile("/nonexistent-dir/x.json", "").ok());
}

}  // namespace
}  // namespace aces
