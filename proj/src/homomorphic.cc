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

#include "aces/homomorphic.h"

#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "aces/cipher.h"

namespace aces {
namespace {

absl::Status CheckPair(const Channel& ch, const Ciphertext& ct1,
                       const Ciphertext& ct2) {
  if (absl::Status s = CheckCiphertextShape(ch, ct1); !s.ok()) return s;
  return CheckCiphertextShape(ch, ct2);
}

absl::Status Overflow(const char* op, std::uint64_t k1, std::uint64_t k2) {
  return absl::FailedPreconditionError(absl::StrCat(
      "noise budget exceeded: ", op, " of levels ", k1, " and ", k2,
      " overflows the leveled guard"));
}

}  // namespace

absl::StatusOr<Ciphertext> HomAdd(const Channel& ch, const Ciphertext& ct1,
                                  const Ciphertext& ct2) {
  if (absl::Status s = CheckPair(ch, ct1, ct2); !s.ok()) return s;
  auto level = LevelAfter(LevelOp::kAdd, ct1.level, ct2.level, ch);
  if (!level.has_value()) return Overflow("add", ct1.level, ct2.level);
  const QuotientRing& ring = ch.ring();
  Ciphertext out;
  out.c.reserve(ch.n());
  for (std::size_t i = 0; i < ch.n(); ++i) {
    out.c.push_back(ring.Add(ct1.c[i], ct2.c[i]));
  }
  out.cprime = ring.Add(ct1.cprime, ct2.cprime);
  out.level = *level;
  return out;
}

absl::StatusOr<std::vector<RingPoly>> Boxtimes(
    const Channel& ch, const LambdaTensor& lam,
    const std::vector<RingPoly>& v1, const std::vector<RingPoly>& v2) {
  const std::size_t n = lam.n();
  if (v1.size() != n || v2.size() != n) {
    return absl::InvalidArgumentError(absl::StrCat(
        "boxtimes dimension mismatch: tensor ", n, ", vectors ", v1.size(),
        " and ", v2.size()));
  }
  const QuotientRing& ring = ch.ring();
  std::vector<RingPoly> out(n, ring.Zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      RingPoly prod = ring.Mul(v1[i], v2[j]);
      for (std::size_t k = 0; k < n; ++k) {
        std::uint64_t l = lam.at(i, j, k);
        if (l == 0) continue;
        out[k] = ring.Add(out[k], ring.ScalarMul(l, prod));
      }
    }
  }
  return out;
}

absl::StatusOr<Ciphertext> HomMul(const Channel& ch, const LambdaTensor& lam,
                                  const Ciphertext& ct1,
                                  const Ciphertext& ct2) {
  if (absl::Status s = CheckPair(ch, ct1, ct2); !s.ok()) return s;
  auto level = LevelAfter(LevelOp::kMul, ct1.level, ct2.level, ch);
  if (!level.has_value()) return Overflow("mul", ct1.level, ct2.level);
  auto box = Boxtimes(ch, lam, ct1.c, ct2.c);
  if (!box.ok()) return box.status();
  const QuotientRing& ring = ch.ring();
  Ciphertext out;
  out.c.reserve(ch.n());
  for (std::size_t i = 0; i < ch.n(); ++i) {
    RingPoly ci = ring.Add(ring.Mul(ct2.cprime, ct1.c[i]),
                           ring.Mul(ct1.cprime, ct2.c[i]));
    out.c.push_back(ring.Sub(ci, (*box)[i]));
  }
  out.cprime = ring.Mul(ct1.cprime, ct2.cprime);
  out.level = *level;
  return out;
}

absl::StatusOr<Ciphertext> ScalarProduct(const Channel& ch,
                                         const LambdaTensor& lam,
                                         const std::vector<Ciphertext>& gamma,
                                         const std::vector<Ciphertext>& rho) {
  if (gamma.empty() || gamma.size() != rho.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "scalar product needs equal non-empty lengths, got ", gamma.size(),
        " and ", rho.size()));
  }
  Ciphertext acc;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    auto term = HomMul(ch, lam, gamma[i], rho[i]);
    if (!term.ok()) {
      return absl::Status(term.status().code(),
                          absl::StrCat("scalar product step ", i, " (mul): ",
                                       term.status().message()));
    }
    if (i == 0) {
      acc = *std::move(term);
      continue;
    }
    auto sum = HomAdd(ch, acc, *term);
    if (!sum.ok()) {
      return absl::Status(sum.status().code(),
                          absl::StrCat("scalar product step ", i, " (add): ",
                                       sum.status().message()));
    }
    acc = *std::move(sum);
  }
  return acc;
}

}  // namespace aces
