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

// Exact modular integer arithmetic and the quotient ring Z_q[X]/(u).
//
// All residues are canonical representatives in [0, modulus). Moduli are
// restricted below 2^62 so that every product fits in an unsigned 128-bit
// intermediate.

#ifndef ACES_RING_H_
#define ACES_RING_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "absl/status/statusor.h"

namespace aces {

using Uint128 = unsigned __int128;
using Int128 = __int128;

inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

// An element of Z_m kept as its canonical representative.
struct Residue {
  std::uint64_t value = 0;
  std::uint64_t modulus = 2;

  static absl::StatusOr<Residue> Create(std::uint64_t value,
                                        std::uint64_t modulus);

  friend bool operator==(const Residue&, const Residue&) = default;
};

// The inclusion Z_p -> Z. Total on canonical residues.
inline std::uint64_t Iota(const Residue& m) { return m.value; }

// The projection Z -> Z_p.
Residue Pi(std::uint64_t p, Int128 z);

struct EuclidDivision {
  std::uint64_t quotient = 0;
  Residue remainder;
};

// Integer division of iota_q(m) by p: iota_q(m) = p * quotient + remainder.
// Requires 2 <= p <= m.modulus.
absl::StatusOr<EuclidDivision> EuclidDivP(std::uint64_t p, const Residue& m);

// z in {0, p, 2p, ..., kp}.
bool ChiMember(std::uint64_t p, std::uint64_t k, Uint128 z);

inline std::uint64_t AddMod(std::uint64_t a, std::uint64_t b,
                            std::uint64_t q) {
  std::uint64_t s = a + b;
  return s >= q ? s - q : s;
}
inline std::uint64_t SubMod(std::uint64_t a, std::uint64_t b,
                            std::uint64_t q) {
  return a >= b ? a - b : a + (q - b);
}
inline std::uint64_t NegMod(std::uint64_t a, std::uint64_t q) {
  return a == 0 ? 0 : q - a;
}
inline std::uint64_t MulMod(std::uint64_t a, std::uint64_t b,
                            std::uint64_t q) {
  return static_cast<std::uint64_t>((Uint128{a} * b) % q);
}
// Reduces a signed integer into [0, q).
std::uint64_t ReduceSigned(Int128 z, std::uint64_t q);

std::uint64_t PowMod(std::uint64_t base, std::uint64_t exp, std::uint64_t q);
std::uint64_t Gcd(std::uint64_t a, std::uint64_t b);
// Inverse of a modulo q, if gcd(a, q) == 1.
std::optional<std::uint64_t> InverseMod(std::uint64_t a, std::uint64_t q);

// Distinct prime factors of q in increasing order (trial division).
std::vector<std::uint64_t> Factorize(std::uint64_t q);

// An n-repartition of q: assigns to every secret-key coordinate either 0
// (the unit q_0 = 1) or the index of one of the distinct prime factors
// q_1 < ... < q_{n0} of q. Coordinates are 0-based; prime indices are not.
class Repartition {
 public:
  Repartition() = default;

  static absl::StatusOr<Repartition> Create(std::uint64_t q,
                                            std::vector<int> sigma);

  std::size_t size() const { return sigma_.size(); }
  std::uint64_t modulus() const { return q_; }
  const std::vector<int>& sigma() const { return sigma_; }
  const std::vector<std::uint64_t>& primes() const { return primes_; }

  // q_{sigma(i)}.
  std::uint64_t PrimeFor(std::size_t i) const {
    return sigma_[i] == 0 ? 1 : primes_[sigma_[i] - 1];
  }

  // sigma[q]_{i,j}.
  absl::StatusOr<std::uint64_t> Weight(std::size_t i, std::size_t j) const;

  friend bool operator==(const Repartition&, const Repartition&) = default;

 private:
  Repartition(std::uint64_t q, std::vector<int> sigma,
              std::vector<std::uint64_t> primes)
      : q_(q), sigma_(std::move(sigma)), primes_(std::move(primes)) {}

  std::uint64_t q_ = 0;
  std::vector<int> sigma_;
  std::vector<std::uint64_t> primes_;
};

// Element of Z_q[X]_u as its canonical coefficient vector (low to high), of
// length exactly deg(u).
struct RingPoly {
  std::vector<std::uint64_t> coeffs;

  friend bool operator==(const RingPoly&, const RingPoly&) = default;
};

enum class PolyOp { kAdd, kSub, kMul, kNeg };

// Z_q[X]/(u) for a monic integer polynomial u of degree d >= 1.
class QuotientRing {
 public:
  // `u` lists integer coefficients from low to high degree, including the
  // leading 1.
  static absl::StatusOr<QuotientRing> Create(std::uint64_t q,
                                             std::vector<std::int64_t> u);

  std::uint64_t modulus() const { return q_; }
  std::size_t degree() const { return d_; }
  const std::vector<std::int64_t>& u() const { return u_; }

  RingPoly Zero() const { return RingPoly{std::vector<std::uint64_t>(d_, 0)}; }
  RingPoly Constant(std::uint64_t v) const;
  absl::StatusOr<RingPoly> FromCoeffs(std::vector<std::uint64_t> coeffs) const;
  // Reduces an arbitrary-length integer coefficient list modulo (q, u).
  RingPoly Reduce(std::span<const Int128> coeffs) const;

  // True iff `a` has the right length and canonical coefficients.
  bool Owns(const RingPoly& a) const;

  RingPoly Add(const RingPoly& a, const RingPoly& b) const;
  RingPoly Sub(const RingPoly& a, const RingPoly& b) const;
  RingPoly Neg(const RingPoly& a) const;
  RingPoly Mul(const RingPoly& a, const RingPoly& b) const;
  RingPoly ScalarMul(std::uint64_t s, const RingPoly& a) const;

  // Checked entry point: rejects operands that do not belong to this ring.
  // For kNeg the second operand is ignored.
  absl::StatusOr<RingPoly> Apply(PolyOp op, const RingPoly& a,
                                 const RingPoly& b) const;

  // v(omega) mod q using the canonical non-negative coefficients.
  std::uint64_t EvaluateAt(const RingPoly& v, std::uint64_t omega) const;

 private:
  QuotientRing(std::uint64_t q, std::vector<std::int64_t> u);

  std::uint64_t q_;
  std::size_t d_;
  std::vector<std::int64_t> u_;
  // Low coefficients of u reduced into [0, q).
  std::vector<std::uint64_t> u_low_mod_q_;
};

}  // namespace aces

#endif  // ACES_RING_H_
