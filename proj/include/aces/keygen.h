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

// Key generation: secret key, initializer, public key, lambda tensor and
// refresher.

#ifndef ACES_KEYGEN_H_
#define ACES_KEYGEN_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "absl/status/statusor.h"
#include "aces/channel.h"
#include "aces/keys.h"
#include "boost/multiprecision/cpp_int.hpp"

namespace aces {

using BigInt = boost::multiprecision::cpp_int;

struct KeyGenOptions {
  int secret_attempts = 256;
  int repartition_attempts = 64;
  int lambda_attempts = 256;
};

// iota_q([[C]](x_i)) for every coordinate.
std::vector<std::uint64_t> SecretImages(const Channel& ch,
                                        const SecretKey& sk);

// The integers q_{sigma(k)} * iota_q([[C]](x_k)).
std::vector<std::uint64_t> BezoutInputs(const Channel& ch,
                                        const Repartition& rep,
                                        const SecretKey& sk);

// Coefficients mu with sum_k a_k * mu_k = 1 in Z, or nullopt if gcd(a) != 1.
std::optional<std::vector<BigInt>> BezoutCoefficients(
    const std::vector<std::uint64_t>& a);

absl::StatusOr<Repartition> SampleRepartition(const Channel& ch,
                                              RandomSource& rng);

absl::StatusOr<SecretKey> GenSecret(const Channel& ch, const Repartition& rep,
                                    RandomSource& rng,
                                    const KeyGenOptions& opts = {});

std::vector<std::vector<RingPoly>> GenInitializer(const Channel& ch,
                                                  const Repartition& rep,
                                                  RandomSource& rng);

absl::StatusOr<PublicKey> GenPublic(
    const Channel& ch, const SecretKey& sk,
    std::vector<std::vector<RingPoly>> f0, RandomSource& rng);

absl::StatusOr<LambdaTensor> GenLambda(const Channel& ch,
                                       const Repartition& rep,
                                       const SecretKey& sk, RandomSource& rng,
                                       const KeyGenOptions& opts = {});

absl::StatusOr<Refresher> GenRefresher(const Channel& ch,
                                       const Repartition& rep,
                                       const SecretKey& sk,
                                       RandomSource& rng);

absl::StatusOr<KeyBundle> KeyGen(const Channel& ch, RandomSource& rng,
                                 const KeyGenOptions& opts = {});

}  // namespace aces

#endif  // ACES_KEYGEN_H_
