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

#include "aces/ring.h"

#include <algorithm>
#include <string>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace aces {

absl::StatusOr<Residue> Residue::Create(std::uint64_t value,
                                        std::uint64_t modulus) {
  if (modulus < 2) {
    return absl::InvalidArgumentError(
        absl::StrCat("modulus must be at least 2, got ", modulus));
  }
  if (value >= modulus) {
    return absl::InvalidArgumentError(absl::StrCat(
        "value ", value, " is not a canonical residue mod ", modulus));
  }
  return Residue{value, modulus};
}

std::uint64_t ReduceSigned(Int128 z, std::uint64_t q) {
  Int128 r = z % static_cast<Int128>(q);
  if (r < 0) r += q;
  return static_cast<std::uint64_t>(r);
}

Residue Pi(std::uint64_t p, Int128 z) { return Residue{ReduceSigned(z, p), p}; }

absl::StatusOr<EuclidDivision> EuclidDivP(std::uint64_t p, const Residue& m) {
  if (p < 2 || p > m.modulus) {
    return absl::InvalidArgumentError(absl::StrCat(
        "euclidean division needs 2 <= p <= q, got p=", p, " q=", m.modulus));
  }
  return EuclidDivision{m.value / p, Residue{m.value % p, p}};
}

bool ChiMember(std::uint64_t p, std::uint64_t k, Uint128 z) {
  return z % p == 0 && z / p <= k;
}

std::uint64_t PowMod(std::uint64_t base, std::uint64_t exp, std::uint64_t q) {
  std::uint64_t result = 1 % q;
  base %= q;
  while (exp > 0) {
    if (exp & 1) result = MulMod(result, base, q);
    base = MulMod(base, base, q);
    exp >>= 1;
  }
  return result;
}

std::uint64_t Gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::optional<std::uint64_t> InverseMod(std::uint64_t a, std::uint64_t q) {
  Int128 old_r = a % q, r = q;
  Int128 old_s = 1, s = 0;
  while (r != 0) {
    Int128 quot = old_r / r;
    std::swap(old_r, r);
    r -= quot * old_r;
    std::swap(old_s, s);
    s -= quot * old_s;
  }
  if (old_r != 1) return std::nullopt;
  return ReduceSigned(old_s, q);
}

std::vector<std::uint64_t> Factorize(std::uint64_t q) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t f = 2; f <= q / f; ++f) {
    if (q % f != 0) continue;
    primes.push_back(f);
    while (q % f == 0) q /= f;
  }
  if (q > 1) primes.push_back(q);
  return primes;
}

absl::StatusOr<Repartition> Repartition::Create(std::uint64_t q,
                                                std::vector<int> sigma) {
  if (q < 2) return absl::InvalidArgumentError("repartition needs q >= 2");
  std::vector<std::uint64_t> primes = Factorize(q);
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (sigma[i] < 0 || static_cast<std::size_t>(sigma[i]) > primes.size()) {
      return absl::InvalidArgumentError(
          absl::StrCat("sigma(", i, ") = ", sigma[i], " outside {0,...,",
                       primes.size(), "}"));
    }
  }
  return Repartition(q, std::move(sigma), std::move(primes));
}

absl::StatusOr<std::uint64_t> Repartition::Weight(std::size_t i,
                                                  std::size_t j) const {
  if (i >= sigma_.size() || j >= sigma_.size()) {
    return absl::OutOfRangeError(absl::StrCat(
        "repartition index (", i, ",", j, ") out of range ", sigma_.size()));
  }
  if (sigma_[i] == sigma_[j]) return q_ / PrimeFor(i);
  return q_ / (PrimeFor(i) * PrimeFor(j));
}

absl::StatusOr<QuotientRing> QuotientRing::Create(std::uint64_t q,
                                                  std::vector<std::int64_t> u) {
  if (q < 2 || q >= kMaxModulus) {
    return absl::InvalidArgumentError(
        absl::StrCat("q must lie in [2, 2^62), got ", q));
  }
  if (u.size() < 2) {
    return absl::InvalidArgumentError("u must have degree at least 1");
  }
  if (u.back() != 1) {
    return absl::InvalidArgumentError("u must be monic");
  }
  return QuotientRing(q, std::move(u));
}

QuotientRing::QuotientRing(std::uint64_t q, std::vector<std::int64_t> u)
    : q_(q), d_(u.size() - 1), u_(std::move(u)) {
  u_low_mod_q_.reserve(d_);
  for (std::size_t i = 0; i < d_; ++i) {
    u_low_mod_q_.push_back(ReduceSigned(u_[i], q_));
  }
}

RingPoly QuotientRing::Constant(std::uint64_t v) const {
  RingPoly r = Zero();
  r.coeffs[0] = v % q_;
  return r;
}

absl::StatusOr<RingPoly> QuotientRing::FromCoeffs(
    std::vector<std::uint64_t> coeffs) const {
  RingPoly r{std::move(coeffs)};
  if (!Owns(r)) {
    return absl::InvalidArgumentError(
        absl::StrCat("polynomial is not a canonical element of Z_", q_,
                     "[X]/(u) with deg u = ", d_));
  }
  return r;
}

bool QuotientRing::Owns(const RingPoly& a) const {
  if (a.coeffs.size() != d_) return false;
  for (std::uint64_t c : a.coeffs) {
    if (c >= q_) return false;
  }
  return true;
}

RingPoly QuotientRing::Reduce(std::span<const Int128> coeffs) const {
  std::vector<std::uint64_t> work;
  work.reserve(std::max(coeffs.size(), d_));
  for (Int128 c : coeffs) work.push_back(ReduceSigned(c, q_));
  work.resize(std::max(work.size(), d_), 0);
  // X^d = -(u_0 + ... + u_{d-1} X^{d-1}) modulo u.
  for (std::size_t k = work.size(); k-- > d_;) {
    std::uint64_t top = work[k];
    if (top == 0) continue;
    work[k] = 0;
    for (std::size_t i = 0; i < d_; ++i) {
      work[k - d_ + i] =
          SubMod(work[k - d_ + i], MulMod(top, u_low_mod_q_[i], q_), q_);
    }
  }
  work.resize(d_);
  return RingPoly{std::move(work)};
}

RingPoly QuotientRing::Add(const RingPoly& a, const RingPoly& b) const {
  RingPoly r = Zero();
  for (std::size_t i = 0; i < d_; ++i) {
    r.coeffs[i] = AddMod(a.coeffs[i], b.coeffs[i], q_);
  }
  return r;
}

RingPoly QuotientRing::Sub(const RingPoly& a, const RingPoly& b) const {
  RingPoly r = Zero();
  for (std::size_t i = 0; i < d_; ++i) {
    r.coeffs[i] = SubMod(a.coeffs[i], b.coeffs[i], q_);
  }
  return r;
}

RingPoly QuotientRing::Neg(const RingPoly& a) const {
  RingPoly r = Zero();
  for (std::size_t i = 0; i < d_; ++i) r.coeffs[i] = NegMod(a.coeffs[i], q_);
  return r;
}

RingPoly QuotientRing::Mul(const RingPoly& a, const RingPoly& b) const {
  std::vector<Int128> prod(2 * d_ - 1, 0);
  for (std::size_t i = 0; i < d_; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < d_; ++j) {
      prod[i + j] = static_cast<Int128>(
          AddMod(static_cast<std::uint64_t>(prod[i + j]),
                 MulMod(a.coeffs[i], b.coeffs[j], q_), q_));
    }
  }
  return Reduce(prod);
}

RingPoly QuotientRing::ScalarMul(std::uint64_t s, const RingPoly& a) const {
  RingPoly r = Zero();
  s %= q_;
  for (std::size_t i = 0; i < d_; ++i) r.coeffs[i] = MulMod(s, a.coeffs[i], q_);
  return r;
}

absl::StatusOr<RingPoly> QuotientRing::Apply(PolyOp op, const RingPoly& a,
                                             const RingPoly& b) const {
  if (!Owns(a) || (op != PolyOp::kNeg && !Owns(b))) {
    return absl::InvalidArgumentError(
        "operand does not belong to this quotient ring");
  }
  switch (op) {
    case PolyOp::kAdd:
      return Add(a, b);
    case PolyOp::kSub:
      return Sub(a, b);
    case PolyOp::kMul:
      return Mul(a, b);
    case PolyOp::kNeg:
      return Neg(a);
  }
  return absl::InvalidArgumentError("unknown polynomial operation");
}

std::uint64_t QuotientRing::EvaluateAt(const RingPoly& v,
                                       std::uint64_t omega) const {
  std::uint64_t acc = 0;
  omega %= q_;
  for (std::size_t i = v.coeffs.size(); i-- > 0;) {
    acc = AddMod(MulMod(acc, omega, q_), v.coeffs[i], q_);
  }
  return acc;
}

}  // namespace aces
