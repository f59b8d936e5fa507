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

#include "aces/cipher.h"

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace aces {

std::uint64_t FreshLevel(const Channel& ch) {
  return ch.params().N * ch.p() * ch.params().k0;
}

std::uint64_t MaxDecryptableLevel(const Channel& ch) {
  return ch.q() / ch.p() - 1;
}

bool IsDecryptable(const Channel& ch, std::uint64_t level) {
  return Uint128{ch.p()} * (Uint128{level} + 1) <= ch.q();
}

std::optional<std::uint64_t> LevelAfter(LevelOp op, std::uint64_t k1,
                                        std::uint64_t k2, const Channel& ch) {
  const Uint128 p = ch.p();
  const Uint128 q = ch.q();
  Uint128 level;
  if (op == LevelOp::kAdd) {
    level = Uint128{k1} + k2;
  } else {
    level = (Uint128{k1} + k2 + Uint128{k1} * k2) * p;
  }
  // The output must stay decryptable: p * (level + 1) <= q.
  if (p * (level + 1) > q) return std::nullopt;
  return static_cast<std::uint64_t>(level);
}

absl::Status CheckCiphertextShape(const Channel& ch, const Ciphertext& ct) {
  if (ct.c.size() != ch.n()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "ciphertext has ", ct.c.size(), " components, expected ", ch.n()));
  }
  for (const RingPoly& ci : ct.c) {
    if (!ch.ring().Owns(ci)) {
      return absl::InvalidArgumentError(
          "ciphertext component is not in the channel ring");
    }
  }
  if (!ch.ring().Owns(ct.cprime)) {
    return absl::InvalidArgumentError("c' is not in the channel ring");
  }
  return absl::OkStatus();
}

RingPoly SampleSigmaComponent(const Channel& ch, const Repartition& rep,
                              std::size_t i, RandomSource& rng) {
  std::uint64_t qs = rep.PrimeFor(i);
  std::uint64_t t = rng.Uniform(ch.q() / qs);
  return ch.SampleWithImage(qs * t, rng);
}

absl::StatusOr<MaskedEncryption> EncryptWithMask(const Channel& ch,
                                                 const Repartition& /*rep*/,
                                                 const PublicKey& pk,
                                                 const Residue& m,
                                                 RandomSource& rng) {
  if (m.modulus != ch.p() || m.value >= ch.p()) {
    return absl::InvalidArgumentError(
        absl::StrCat("message must be a residue mod p=", ch.p()));
  }
  if (pk.f0.size() != ch.N() || pk.fprime.size() != ch.N()) {
    return absl::InvalidArgumentError("public key does not have N rows");
  }
  const QuotientRing& ring = ch.ring();
  MaskedEncryption out;
  std::vector<RingPoly> b;
  b.reserve(ch.N());
  for (std::size_t i = 0; i < ch.N(); ++i) {
    std::uint64_t t = rng.UniformIn(0, ch.p());
    out.mask_images.push_back(t);
    b.push_back(ch.SampleWithImage(t, rng));
  }
  Ciphertext& ct = out.ct;
  ct.c.assign(ch.n(), ring.Zero());
  for (std::size_t j = 0; j < ch.n(); ++j) {
    for (std::size_t i = 0; i < ch.N(); ++i) {
      ct.c[j] = ring.Add(ct.c[j], ring.Mul(pk.f0[i][j], b[i]));
    }
  }
  ct.cprime = ch.SampleErrorImage(Residue{m.value, ch.q()}, rng);
  for (std::size_t i = 0; i < ch.N(); ++i) {
    ct.cprime = ring.Add(ct.cprime, ring.Mul(b[i], pk.fprime[i]));
  }
  ct.level = FreshLevel(ch);
  return out;
}

absl::StatusOr<Ciphertext> Encrypt(const Channel& ch, const Repartition& rep,
                                   const PublicKey& pk, const Residue& m,
                                   RandomSource& rng) {
  auto enc = EncryptWithMask(ch, rep, pk, m, rng);
  if (!enc.ok()) return enc.status();
  return std::move(enc->ct);
}

absl::StatusOr<Ciphertext> EncryptWithSecret(const Channel& ch,
                                             const Repartition& rep,
                                             const SecretKey& sk,
                                             const Residue& m,
                                             std::uint64_t k,
                                             RandomSource& rng) {
  if (sk.x.size() != ch.n() || rep.size() != ch.n()) {
    return absl::InvalidArgumentError("key dimension does not match n");
  }
  const QuotientRing& ring = ch.ring();
  Ciphertext ct;
  ct.c.reserve(ch.n());
  for (std::size_t i = 0; i < ch.n(); ++i) {
    ct.c.push_back(SampleSigmaComponent(ch, rep, i, rng));
  }
  ct.cprime = ch.SampleErrorImage(Residue{m.value % ch.q(), ch.q()}, rng);
  for (std::size_t i = 0; i < ch.n(); ++i) {
    ct.cprime = ring.Add(ct.cprime, ring.Mul(ct.c[i], sk.x[i]));
  }
  ct.cprime = ring.Add(ct.cprime, ch.SampleVanishing(k, rng));
  ct.level = k;
  return ct;
}

RingPoly DecryptionResidual(const Channel& ch, const SecretKey& sk,
                            const Ciphertext& ct) {
  const QuotientRing& ring = ch.ring();
  RingPoly acc = ct.cprime;
  for (std::size_t i = 0; i < ct.c.size(); ++i) {
    acc = ring.Sub(acc, ring.Mul(ct.c[i], sk.x[i]));
  }
  return acc;
}

absl::StatusOr<Residue> Decrypt(const Channel& ch, const SecretKey& sk,
                                const Ciphertext& ct) {
  if (absl::Status s = CheckCiphertextShape(ch, ct); !s.ok()) return s;
  if (sk.x.size() != ch.n()) {
    return absl::InvalidArgumentError("secret key dimension does not match n");
  }
  if (!IsDecryptable(ch, ct.level)) {
    return absl::FailedPreconditionError(absl::StrCat(
        "noise budget exceeded: level ", ct.level, " > ",
        MaxDecryptableLevel(ch)));
  }
  return Pi(ch.p(), ch.Eval(DecryptionResidual(ch, sk, ct)));
}

bool InSigmaIdeal(const Channel& ch, const Repartition& rep,
                  const std::vector<RingPoly>& c) {
  if (c.size() != rep.size()) return false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (ch.Eval(c[i]) % rep.PrimeFor(i) != 0) return false;
  }
  return true;
}

bool InEncryptionSpace(const Channel& ch, const Repartition& rep,
                       const SecretKey& sk, const Ciphertext& ct,
                       std::uint64_t m, std::uint64_t k) {
  if (!CheckCiphertextShape(ch, ct).ok()) return false;
  if (!InSigmaIdeal(ch, rep, ct.c)) return false;
  std::uint64_t noise =
      SubMod(ch.Eval(DecryptionResidual(ch, sk, ct)), m % ch.q(), ch.q());
  return ChiMember(ch.p(), k, noise);
}

}  // namespace aces
