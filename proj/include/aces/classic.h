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

// Toy ElGamal and RSA run through the same generate -> publish -> encrypt ->
// decrypt driver as ACES. Parameters are tiny; nothing here is secure.

#ifndef ACES_CLASSIC_H_
#define ACES_CLASSIC_H_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "aces/channel.h"

namespace aces {

// A multiplicative element g of order `order` modulo a small prime.
struct ToyGroupParams {
  std::uint64_t modulus = 23;
  std::uint64_t g = 5;
  std::uint64_t order = 22;
};

absl::Status ValidateToyGroup(const ToyGroupParams& params);

struct ElGamalCiphertext {
  std::uint64_t c1 = 1;
  std::uint64_t c2 = 1;

  friend bool operator==(const ElGamalCiphertext&,
                         const ElGamalCiphertext&) = default;
};

// f = g^x. Rejects g equal to the neutral element.
absl::StatusOr<std::uint64_t> ElGamalPublicKey(const ToyGroupParams& params,
                                               std::uint64_t x);
// (g^h, f^h * m).
ElGamalCiphertext ElGamalEncrypt(const ToyGroupParams& params, std::uint64_t f,
                                 std::uint64_t m, std::uint64_t h);
// c1^{-x} * c2.
std::uint64_t ElGamalDecrypt(const ToyGroupParams& params, std::uint64_t x,
                             const ElGamalCiphertext& ct);

struct RsaKey {
  std::uint64_t n = 0;
  std::uint64_t f0 = 0;
  std::uint64_t f0_inv = 0;
  // Carmichael function of n.
  std::uint64_t lambda = 0;
};

// n = prime1 * prime2; rejects f0 not invertible modulo lambda(n).
absl::StatusOr<RsaKey> RsaKeyGen(std::uint64_t prime1, std::uint64_t prime2,
                                 std::uint64_t f0);
std::uint64_t RsaEncrypt(const RsaKey& key, std::uint64_t m);
std::uint64_t RsaDecrypt(const RsaKey& key, std::uint64_t c);

// Generation, publication, encryption and decryption as four steps over
// printable values.
class FourStepScheme {
 public:
  virtual ~FourStepScheme() = default;

  virtual std::string name() const = 0;
  virtual absl::Status Generate(RandomSource& rng) = 0;
  virtual std::string Publish() const = 0;
  virtual absl::StatusOr<std::string> Encrypt(std::uint64_t message,
                                              RandomSource& rng) const = 0;
  virtual absl::StatusOr<std::uint64_t> Decrypt(
      const std::string& ciphertext) const = 0;
};

struct Transcript {
  std::vector<std::string> steps;
  std::uint64_t recovered = 0;

  friend bool operator==(const Transcript&, const Transcript&) = default;
};

absl::StatusOr<Transcript> RunFourSteps(FourStepScheme& scheme,
                                        std::uint64_t message,
                                        std::uint64_t seed);

std::unique_ptr<FourStepScheme> MakeElGamalScheme(ToyGroupParams params);
std::unique_ptr<FourStepScheme> MakeRsaScheme(std::uint64_t prime1,
                                              std::uint64_t prime2,
                                              std::uint64_t f0);
std::unique_ptr<FourStepScheme> MakeAcesScheme(ArithmeticChannel params);

}  // namespace aces

#endif  // ACES_CLASSIC_H_
