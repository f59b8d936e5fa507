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

#include "aces/keygen.h"

#include <numeric>

#include "aces/cipher.h"
#include "gtest/gtest.h"
#include "test_support.h"

namespace aces {
namespace {

using ::boost::multiprecision::cpp_int;

// Independent gcd check over the integers q_{sigma(k)} * [[C]](x_k).
std::uint64_t GcdOfInputs(const Channel& ch, const Repartition& rep,
                          const SecretKey& sk) {
  std::uint64_t g = 0;
  for (std::size_t k = 0; k < sk.x.size(); ++k) {
    std::uint64_t sum = 0;
    for (std::uint64_t c : sk.x[k].coeffs) sum += c;  // omega = 1
    g = std::gcd(g, rep.PrimeFor(k) * (sum % ch.q()));
  }
  return g;
}

TEST(GenSecretTest, GcdInvariantAtDesk) {
  Channel ch = testing::Desk();
  RandomSource rng(std::uint64_t{20});
  for (int t = 0; t < 50; ++t) {
    auto rep = SampleRepartition(ch, rng);
    ASSERT_TRUE(rep.ok());
    auto sk = GenSecret(ch, *rep, rng);
    if (!sk.ok()) {
      EXPECT_EQ(sk.status().code(), absl::StatusCode::kResourceExhausted);
      continue;
    }
    EXPECT_EQ(GcdOfInputs(ch, *rep, *sk), 1u);
    for (const RingPoly& x : sk->x) EXPECT_TRUE(ch.ring().Owns(x));
  }
}

TEST(GenSecretTest, SingleUnitCoordinateForcesImageOne) {
  ArithmeticChannel params;
  params.q = 15;
  params.u = {-1, 0, 1};
  params.n = 1;
  params.N = 1;
  Channel ch = testing::MakeChannel(params);
  auto rep = Repartition::Create(15, {0});
  ASSERT_TRUE(rep.ok());
  RandomSource rng(std::uint64_t{21});
  auto sk = GenSecret(ch, *rep, rng);
  ASSERT_TRUE(sk.ok()) << sk.status();
  EXPECT_EQ(ch.Eval(sk->x[0]), 1u);
}

TEST(GenSecretTest, ImpossibleRepartitionExhaustsBudget) {
  // Every coordinate carries the factor 3, so the gcd is never 1.
  Channel ch = testing::Desk();
  auto rep = Repartition::Create(ch.q(), {1, 1, 1});
  ASSERT_TRUE(rep.ok());
  RandomSource rng(std::uint64_t{22});
  KeyGenOptions opts;
  opts.secret_attempts = 16;
  auto sk = GenSecret(ch, *rep, rng, opts);
  EXPECT_EQ(sk.status().code(), absl::StatusCode::kResourceExhausted);
}

TEST(BezoutTest, IdentityHoldsInIntegers) {
  RandomSource rng(std::uint64_t{23});
  for (int t = 0; t < 500; ++t) {
    std::vector<std::uint64_t> a(1 + rng.Uniform(5));
    for (auto& v : a) v = rng.Uniform(1u << 20);
    std::uint64_t g = 0;
    for (auto v : a) g = std::gcd(g, v);
    auto mu = BezoutCoefficients(a);
    ASSERT_EQ(mu.has_value(), g == 1);
    if (!mu) continue;
    cpp_int sum = 0;
    for (std::size_t k = 0; k < a.size(); ++k) sum += cpp_int(a[k]) * (*mu)[k];
    EXPECT_EQ(sum, 1);
  }
  EXPECT_FALSE(BezoutCoefficients({}).has_value());
  EXPECT_FALSE(BezoutCoefficients({0, 0}).has_value());
  EXPECT_TRUE(BezoutCoefficients({0, 1}).has_value());
}

TEST(GenInitializerTest, DivisibilityAtDesk) {
  Channel ch = testing::Desk();
  RandomSource rng(std::uint64_t{24});
  for (int t = 0; t < 20; ++t) {
    auto rep = SampleRepartition(ch, rng);
    ASSERT_TRUE(rep.ok());
    auto f0 = GenInitializer(ch, *rep, rng);
    ASSERT_EQ(f0.size(), 2u);
    for (const auto& row : f0) {
      ASSERT_EQ(row.size(), 3u);
      for (std::size_t j = 0; j < 3; ++j) {
        EXPECT_EQ(ch.Eval(row[j]) % rep->PrimeFor(j), 0u);
      }
    }
  }
}

TEST(GenInitializerTest, UnitRepartitionIsUnconstrained) {
  Channel ch = testing::Desk();
  auto rep = Repartition::Create(ch.q(), {0, 0, 0});
  ASSERT_TRUE(rep.ok());
  RandomSource rng(std::uint64_t{25});
  bool saw_non_multiple = false;
  for (int t = 0; t < 50; ++t) {
    for (const auto& row : GenInitializer(ch, *rep, rng)) {
      for (const RingPoly& e : row) saw_non_multiple |= ch.Eval(e) % 3 != 0;
    }
  }
  EXPECT_TRUE(saw_non_multiple);
}

class BundleTest : public ::testing::Test {
 protected:
  Channel ch_ = testing::Desk();
};

TEST_F(BundleTest, PublicResidualInVanishingIdeal) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    KeyBundle kb = testing::MakeBundle(ch_, seed);
    const QuotientRing& r = ch_.ring();
    for (std::size_t i = 0; i < ch_.N(); ++i) {
      RingPoly fx = r.Zero();
      for (std::size_t j = 0; j < ch_.n(); ++j) {
        fx = r.Add(fx, r.Mul(kb.pk.f0[i][j], kb.sk.x[j]));
      }
      EXPECT_TRUE(ch_.InVanishingIdeal(r.Sub(kb.pk.fprime[i], fx),
                                       ch_.params().k0));
    }
  }
}

TEST_F(BundleTest, LambdaInvariants) {
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    KeyBundle kb = testing::MakeBundle(ch_, seed);
    const std::size_t n = ch_.n();
    const QuotientRing& r = ch_.ring();
    auto mu = BezoutCoefficients(BezoutInputs(ch_, kb.rep, kb.sk));
    ASSERT_TRUE(mu.has_value());
    cpp_int sum = 0;
    for (std::size_t k = 0; k < n; ++k) {
      sum += cpp_int(kb.rep.PrimeFor(k)) * ch_.Eval(kb.sk.x[k]) * (*mu)[k];
    }
    EXPECT_EQ(sum, 1);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        RingPoly e = r.Mul(kb.sk.x[i], kb.sk.x[j]);
        bool unit_i = true, unit_j = true;
        for (std::size_t k = 0; k < n; ++k) {
          std::uint64_t l = kb.lambda.at(i, j, k);
          EXPECT_EQ(l, kb.lambda.at(j, i, k));
          EXPECT_EQ(l % kb.rep.PrimeFor(k), 0u);
          e = r.Sub(e, r.ScalarMul(l, kb.sk.x[k]));
          unit_i &= l == (k == j ? ch_.Eval(kb.sk.x[i]) : 0);
          unit_j &= l == (k == i ? ch_.Eval(kb.sk.x[j]) : 0);
        }
        EXPECT_FALSE(unit_i || unit_j);
        EXPECT_EQ(ch_.Eval(e) % *kb.rep.Weight(i, j), 0u);
      }
    }
  }
}

TEST_F(BundleTest, RefresherDecryptsToDigits) {
  KeyBundle kb = testing::MakeBundle(ch_, 7);
  ASSERT_EQ(kb.refresher.rho.size(), ch_.n());
  for (std::size_t i = 0; i < ch_.n(); ++i) {
    std::uint64_t image = ch_.Eval(kb.sk.x[i]);
    EXPECT_EQ(kb.refresher.kappa[i], 1u);
    EXPECT_EQ(kb.refresher.rho[i].level, 1u);
    auto m = Decrypt(ch_, kb.sk, kb.refresher.rho[i]);
    ASSERT_TRUE(m.ok());
    EXPECT_EQ(m->value, image % ch_.p());
    EXPECT_TRUE(InEncryptionSpace(ch_, kb.rep, kb.sk, kb.refresher.rho[i],
                                  image % ch_.p(), 1));
  }
}

TEST_F(BundleTest, DeterministicForFixedSeed) {
  EXPECT_EQ(testing::MakeBundle(ch_, 42), testing::MakeBundle(ch_, 42));
  EXPECT_FALSE(testing::MakeBundle(ch_, 42) == testing::MakeBundle(ch_, 43));
}

TEST(KeyGenTest, MicroParameters) {
  Channel ch = testing::Micro();
  KeyBundle kb = testing::MakeBundle(ch, 5);
  EXPECT_EQ(kb.sk.x.size(), 2u);
  EXPECT_EQ(kb.pk.f0.size(), 1u);
  EXPECT_EQ(kb.lambda.n(), 2u);
}

TEST(KeyGenTest, MinimalSingleCoordinateChannel) {
  ArithmeticChannel params;
  params.q = 15;
  params.u = {-1, 0, 1};
  params.n = 1;
  params.N = 1;
  Channel ch = testing::MakeChannel(params);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    RandomSource rng(seed);
    auto kb = KeyGen(ch, rng);
    if (!kb.ok()) {
      EXPECT_FALSE(kb.status().message().empty());
      continue;
    }
    // A single coordinate needs q_sigma(1) * X_1 = 1.
    EXPECT_EQ(kb->rep.PrimeFor(0), 1u);
    EXPECT_EQ(ch.Eval(kb->sk.x[0]), 1u);
  }
}

TEST(GenLambdaTest, RejectsSecretWithoutBezout) {
  Channel ch = testing::Desk();
  auto rep = Repartition::Create(ch.q(), {1, 1, 1});
  SecretKey sk{{ch.ring().Constant(1), ch.ring().Constant(2),
                ch.ring().Constant(4)}};
  RandomSource rng(std::uint64_t{26});
  EXPECT_EQ(GenLambda(ch, *rep, sk, rng).status().code(),
            absl::StatusCode::kFailedPrecondition);
}

}  // namespace
}  // namespace aces
