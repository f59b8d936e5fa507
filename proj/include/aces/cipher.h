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

// Encryption, decryption and noise-level accounting.

#ifndef ACES_CIPHER_H_
#define ACES_CIPHER_H_

#include <cstdint>
#include <optional>

#include "absl/status/statusor.h"
#include "aces/channel.h"
#include "aces/keys.h"

namespace aces {

// Level certified for a fresh public-key encryption: N * p * k0.
std::uint64_t FreshLevel(const Channel& ch);

// Largest k with p * (k + 1) <= q, i.e. k < (q + 1)/p - 1.
std::uint64_t MaxDecryptableLevel(const Channel& ch);
bool IsDecryptable(const Channel& ch, std::uint64_t level);

enum class LevelOp { kAdd, kMul };

// Closed-form output level, or nullopt when the result would not be
// decryptable.
std::optional<std::uint64_t> LevelAfter(LevelOp op, std::uint64_t k1,
                                        std::uint64_t k2,
                                        const Channel& ch);

// Public-key encryption of m in Z_p.
absl::StatusOr<Ciphertext> Encrypt(const Channel& ch, const Repartition& rep,
                                   const PublicKey& pk, const Residue& m,
                                   RandomSource& rng);

// Same as Encrypt and also returns the mask images [[C]](b_i).
struct MaskedEncryption {
  Ciphertext ct;
  std::vector<std::uint64_t> mask_images;
};
absl::StatusOr<MaskedEncryption> EncryptWithMask(const Channel& ch,
                                                 const Repartition& rep,
                                                 const PublicKey& pk,
                                                 const Residue& m,
                                                 RandomSource& rng);

// (c, r(m) + c^T x + e) with c uniform in sigma Z_q[X]_u and e in I_k.
// `m` is taken modulo q.
absl::StatusOr<Ciphertext> EncryptWithSecret(const Channel& ch,
                                             const Repartition& rep,
                                             const SecretKey& sk,
                                             const Residue& m,
                                             std::uint64_t k,
                                             RandomSource& rng);

// A uniform element of Z_q[X]_u whose image is divisible by q_{sigma(i)}.
RingPoly SampleSigmaComponent(const Channel& ch, const Repartition& rep,
                              std::size_t i, RandomSource& rng);

// c' - c^T x.
RingPoly DecryptionResidual(const Channel& ch, const SecretKey& sk,
                            const Ciphertext& ct);

// pi_p(iota_q([[C]](c' - c^T x))). Refuses past the noise bound.
absl::StatusOr<Residue> Decrypt(const Channel& ch, const SecretKey& sk,
                                const Ciphertext& ct);

// Structural checks shared by every entry point.
absl::Status CheckCiphertextShape(const Channel& ch, const Ciphertext& ct);

// True iff every [[C]](c_i) is divisible by q_{sigma(i)}.
bool InSigmaIdeal(const Channel& ch, const Repartition& rep,
                  const std::vector<RingPoly>& c);

// Secret-side membership in S^x_{C,k}(m|sigma) for m in Z_q.
bool InEncryptionSpace(const Channel& ch, const Repartition& rep,
                       const SecretKey& sk, const Ciphertext& ct,
                       std::uint64_t m, std::uint64_t k);

}  // namespace aces

#endif  // ACES_CIPHER_H_
