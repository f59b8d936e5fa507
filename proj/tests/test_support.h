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

// Shared fixtures for the test binaries.

#ifndef ACES_TESTS_TEST_SUPPORT_H_
#define ACES_TESTS_TEST_SUPPORT_H_

#include <cstdint>
#include <vector>

#include "aces/channel.h"
#include "aces/keygen.h"
#include "aces/keys.h"
#include "aces/refresh.h"
#include "gtest/gtest.h"

namespace aces {
namespace testing {

inline Channel MakeChannel(const ArithmeticChannel& params) {
  auto ch = Channel::Create(params);
  EXPECT_TRUE(ch.ok()) << ch.status();
  return *std::move(ch);
}

inline Channel Desk() { return MakeChannel(DeskParameters()); }
inline Channel Micro() { return MakeChannel(MicroParameters()); }

inline KeyBundle MakeBundle(const Channel& ch, std::uint64_t seed) {
  RandomSource rng(seed);
  auto bundle = KeyGen(ch, rng);
  EXPECT_TRUE(bundle.ok()) << bundle.status();
  return *std::move(bundle);
}

inline PublicMaterial MakePublic(const Channel& ch, const KeyBundle& kb,
                                 std::uint64_t seed) {
  RandomSource rng(seed);
  auto db = BuildLocatorDb(ch, kb.sk, rng);
  EXPECT_TRUE(db.ok()) << db.status();
  return PublicMaterial{kb.rep, kb.pk, kb.lambda, kb.refresher,
                        *std::move(db)};
}

inline RingPoly RandomPoly(const Channel& ch, RandomSource& rng) {
  RingPoly v = ch.ring().Zero();
  for (std::uint64_t& c : v.coeffs) c = rng.Uniform(ch.q());
  return v;
}

}  // namespace testing
}  // namespace aces

#endif  // ACES_TESTS_TEST_SUPPORT_H_
