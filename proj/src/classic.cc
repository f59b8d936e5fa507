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

#include "aces/classic.h"

#include <numeric>
#include <optional>
#include <utility>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "aces/cipher.h"
#include "aces/keygen.h"
#include "aces/ring.h"
#include "aces/serialization.h"

namespace aces {

absl::Status ValidateToyGroup(const ToyGroupParams& params) {
  const std::uint64_t P = params.modulus;
  if (P < 3 || P >= (1u << 16) || Factorize(P) != std::vector<std::uint64_t>{P}) {
    return absl::InvalidArgumentError(
        absl::StrCat("toy modulus must be a prime below 2^16, got ", P));
  }
  if (params.order == 0 || PowMod(params.g, params.order, P) != 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("g^", params.order, " != 1 mod ", P));
  }
  for (std::uint64_t r : Factorize(params.order)) {
    if (PowMod(params.g, params.order / r, P) == 1) {
      return absl::InvalidArgumentError(absl::StrCat(
          "g has order smaller than ", params.order, " mod ", P));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<std::uint64_t> ElGamalPublicKey(const ToyGroupParams& params,
                                               std::uint64_t x) {
  if (params.g % params.modulus == 1) {
    return absl::InvalidArgumentError("generator equals the neutral element");
  }
  return PowMod(params.g, x, params.modulus);
}

ElGamalCiphertext ElGamalEncrypt(const ToyGroupParams& params, std::uint64_t f,
                                 std::uint64_t m, std::uint64_t h) {
  const std::uint64_t P = params.modulus;
  return {PowMod(params.g, h, P), MulMod(PowMod(f, h, P), m % P, P)};
}

std::uint64_t ElGamalDecrypt(const ToyGroupParams& params, std::uint64_t x,
                             const ElGamalCiphertext& ct) {
  const std::uint64_t P = params.modulus;
  // c1 has order dividing `order`, so c1^{-x} = c1^{order - x mod order}.
  std::uint64_t e = (params.order - x % params.order) % params.order;
  return MulMod(PowMod(ct.c1, e, P), ct.c2, P);
}

absl::StatusOr<RsaKey> RsaKeyGen(std::uint64_t prime1, std::uint64_t prime2,
                                 std::uint64_t f0) {
  for (std::uint64_t p : {prime1, prime2}) {
    if (p < 2 || Factorize(p) != std::vector<std::uint64_t>{p}) {
      return absl::InvalidArgumentError(absl::StrCat(p, " is not prime"));
    }
  }
  if (prime1 == prime2) {
    return absl::InvalidArgumentError("RSA primes must be distinct");
  }
  RsaKey key;
  key.n = prime1 * prime2;
  key.lambda = std::lcm(prime1 - 1, prime2 - 1);
  std::optional<std::uint64_t> inv = InverseMod(f0, key.lambda);
  if (!inv.has_value()) {
    return absl::InvalidArgumentError(
        absl::StrCat("f0=", f0, " is not invertible modulo lambda(n)=",
                     key.lambda));
  }
  key.f0 = f0;
  key.f0_inv = *inv;
  return key;
}

std::uint64_t RsaEncrypt(const RsaKey& key, std::uint64_t m) {
  return PowMod(m, key.f0, key.n);
}

std::uint64_t RsaDecrypt(const RsaKey& key, std::uint64_t c) {
  return PowMod(c, key.f0_inv, key.n);
}

namespace {

absl::StatusOr<std::uint64_t> ParseUint(absl::string_view s) {
  std::uint64_t v = 0;
  if (!absl::SimpleAtoi(s, &v)) {
    return absl::InvalidArgumentError(
        absl::StrCat("not an integer: ", std::string(s)));
  }
  return v;
}

class ElGamalScheme : public FourStepScheme {
 public:
  explicit ElGamalScheme(ToyGroupParams params) : params_(params) {}

  std::string name() const override { return "elgamal"; }

  absl::Status Generate(RandomSource& rng) override {
    if (absl::Status s = ValidateToyGroup(params_); !s.ok()) return s;
    x_ = rng.UniformIn(1, params_.order - 1);
    auto f = ElGamalPublicKey(params_, x_);
    if (!f.ok()) return f.status();
    f_ = *f;
    return absl::OkStatus();
  }

  std::string Publish() const override {
    return absl::StrCat("modulus=", params_.modulus, " g=", params_.g,
                        " f=", f_);
  }

  absl::StatusOr<std::string> Encrypt(std::uint64_t message,
                                      RandomSource& rng) const override {
    if (message == 0 || message >= params_.modulus) {
      return absl::InvalidArgumentError("message must be a nonzero residue");
    }
    ElGamalCiphertext ct =
        ElGamalEncrypt(params_, f_, message, rng.Uniform(params_.order));
    return absl::StrCat(ct.c1, ",", ct.c2);
  }

  absl::StatusOr<std::uint64_t> Decrypt(
      const std::string& ciphertext) const override {
    std::vector<std::string> parts = absl::StrSplit(ciphertext, ',');
    if (parts.size() != 2) {
      return absl::InvalidArgumentError("expected c1,c2");
    }
    auto c1 = ParseUint(parts[0]);
    auto c2 = ParseUint(parts[1]);
    if (!c1.ok()) return c1.status();
    if (!c2.ok()) return c2.status();
    return ElGamalDecrypt(params_, x_, {*c1, *c2});
  }

 private:
  ToyGroupParams params_;
  std::uint64_t x_ = 0;
  std::uint64_t f_ = 1;
};

class RsaScheme : public FourStepScheme {
 public:
  RsaScheme(std::uint64_t prime1, std::uint64_t prime2, std::uint64_t f0)
      : prime1_(prime1), prime2_(prime2), f0_(f0) {}

  std::string name() const override { return "rsa"; }

  absl::Status Generate(RandomSource&) override {
    auto key = RsaKeyGen(prime1_, prime2_, f0_);
    if (!key.ok()) return key.status();
    key_ = *key;
    return absl::OkStatus();
  }

  std::string Publish() const override {
    return absl::StrCat("n=", key_.n, " f0=", key_.f0);
  }

  absl::StatusOr<std::string> Encrypt(std::uint64_t message,
                                      RandomSource&) const override {
    if (message >= key_.n) {
      return absl::InvalidArgumentError("message must be below n");
    }
    return absl::StrCat(RsaEncrypt(key_, message));
  }

  absl::StatusOr<std::uint64_t> Decrypt(
      const std::string& ciphertext) const override {
    auto c = ParseUint(ciphertext);
    if (!c.ok()) return c.status();
    return RsaDecrypt(key_, *c);
  }

 private:
  std::uint64_t prime1_, prime2_, f0_;
  RsaKey key_;
};

class AcesScheme : public FourStepScheme {
 public:
  explicit AcesScheme(ArithmeticChannel params) : params_(std::move(params)) {}

  std::string name() const override { return "aces"; }

  absl::Status Generate(RandomSource& rng) override {
    auto ch = Channel::Create(params_);
    if (!ch.ok()) return ch.status();
    channel_.emplace(*std::move(ch));
    auto bundle = KeyGen(*channel_, rng);
    if (!bundle.ok()) return bundle.status();
    bundle_ = *std::move(bundle);
    return absl::OkStatus();
  }

  std::string Publish() const override {
    PublicMaterial pub{bundle_.rep, bundle_.pk, bundle_.lambda,
                       bundle_.refresher, {}};
    return SerializePublicMaterial(pub);
  }

  absl::StatusOr<std::string> Encrypt(std::uint64_t message,
                                      RandomSource& rng) const override {
    if (message >= params_.p) {
      return absl::InvalidArgumentError("message must lie in Z_p");
    }
    auto ct = aces::Encrypt(*channel_, bundle_.rep, bundle_.pk,
                            Residue{message, params_.p}, rng);
    if (!ct.ok()) return ct.status();
    return SerializeCiphertext(*ct);
  }

  absl::StatusOr<std::uint64_t> Decrypt(
      const std::string& ciphertext) const override {
    auto ct = ParseCiphertext(ciphertext);
    if (!ct.ok()) return ct.status();
    auto m = aces::Decrypt(*channel_, bundle_.sk, *ct);
    if (!m.ok()) return m.status();
    return m->value;
  }

 private:
  ArithmeticChannel params_;
  std::optional<Channel> channel_;
  KeyBundle bundle_;
};

}  // namespace

absl::StatusOr<Transcript> RunFourSteps(FourStepScheme& scheme,
                                        std::uint64_t message,
                                        std::uint64_t seed) {
  RandomSource rng(seed);
  Transcript t;
  if (absl::Status s = scheme.Generate(rng); !s.ok()) return s;
  t.steps.push_back(absl::StrCat("generate ", scheme.name()));
  t.steps.push_back(absl::StrCat("publish ", scheme.Publish()));
  auto ct = scheme.Encrypt(message, rng);
  if (!ct.ok()) return ct.status();
  t.steps.push_back(absl::StrCat("encrypt ", *ct));
  auto m = scheme.Decrypt(*ct);
  if (!m.ok()) return m.status();
  t.steps.push_back(absl::StrCat("decrypt ", *m));
  t.recovered = *m;
  return t;
}

std::unique_ptr<FourStepScheme> MakeElGamalScheme(ToyGroupParams params) {
  return std::make_unique<ElGamalScheme>(params);
}

std::unique_ptr<FourStepScheme> MakeRsaScheme(std::uint64_t prime1,
                                              std::uint64_t prime2,
                                              std::uint64_t f0) {
  return std::make_unique<RsaScheme>(prime1, prime2, f0);
}

std::unique_ptr<FourStepScheme> MakeAcesScheme(ArithmeticChannel params) {
  return std::make_unique<AcesScheme>(std::move(params));
}

}  // namespace aces
