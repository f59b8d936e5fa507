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

// Homomorphic addition, the lambda-product and multiplication of ciphertexts.

#ifndef ACES_HOMOMORPHIC_H_
#define ACES_HOMOMORPHIC_H_

#include <vector>

#include "absl/status/statusor.h"
#include "aces/channel.h"
#include "aces/keys.h"

namespace aces {

absl::StatusOr<Ciphertext> HomAdd(const Channel& ch, const Ciphertext& ct1,
                                  const Ciphertext& ct2);

// Component k is sum_{i,j} lambda^k_{i,j} v1_i v2_j.
absl::StatusOr<std::vector<RingPoly>> Boxtimes(
    const Channel& ch, const LambdaTensor& lam,
    const std::vector<RingPoly>& v1, const std::vector<RingPoly>& v2);

// (c2' c1 + c1' c2 - c1 [x] c2, c1' c2') at level (k1 + k2 + k1 k2) p.
absl::StatusOr<Ciphertext> HomMul(const Channel& ch, const LambdaTensor& lam,
                                  const Ciphertext& ct1,
                                  const Ciphertext& ct2);

// Left-to-right sum of gamma_i * rho_i.
absl::StatusOr<Ciphertext> ScalarProduct(const Channel& ch,
                                         const LambdaTensor& lam,
                                         const std::vector<Ciphertext>& gamma,
                                         const std::vector<Ciphertext>& rho);

}  // namespace aces

#endif  // ACES_HOMOMORPHIC_H_
