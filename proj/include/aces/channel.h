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

// Arithmetic channels (p, q, omega, u) and the samplers built on them.

#ifndef ACES_CHANNEL_H_
#define ACES_CHANNEL_H_

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "aces/ring.h"

namespace aces {

// The public parameter tuple together with the key dimensions.
struct ArithmeticChannel {
  std::uint64_t p = 2;
  std::uint64_t q = 15015;
  std::uint64_t omega = 1;
  // Integer coefficients of u from low to high degree, leading 1 included.
  std::vector<std::int64_t> u = {-1, 0, 0, 0, 1};
  std::size_t n = 3;
  std::size_t N = 2;
  std::uint64_t k0 = 1;

  std::size_t degree() const { return u.empty() ? 0 : u.size() - 1; }

  friend bool operator==(const ArithmeticChannel&,
                         const ArithmeticChannel&) = default;
};

// X^d - 1 as a coefficient list.
std::vector<std::int64_t> MonomialMinusOne(std::size_t d);

// p=2, q=15015, omega=1, u=X^4-1, n=3, N=2, k0=1.
ArithmeticChannel DeskParameters();
// p=2, q=105, omega=1, u=X^2-1, n=2, N=1, k0=1.
ArithmeticChannel MicroParameters();

// Checks every constraint and reports all violations at once.
absl::Status ValidateChannel(const ArithmeticChannel& ch);

// Deterministic randomness keyed by a byte string.
class RandomSource {
 public:
  explicit RandomSource(std::string_view seed);
  explicit RandomSource(std::uint64_t seed);

  // Parses a hex seed such as "00ff12".
  static absl::StatusOr<RandomSource> FromHex(std::string_view hex);

  // Uniform in [0, bound). Requires bound >= 1.
  std::uint64_t Uniform(std::uint64_t bound);
  // Uniform in [lo, hi].
  std::uint64_t UniformIn(std::uint64_t lo, std::uint64_t hi);

  std::uint64_t draws() const { return draws_; }

 private:
  std::mt19937_64 engine_;
  std::uint64_t draws_ = 0;
};

// A validated channel with its quotient ring and the inverse of omega.
class Channel {
 public:
  static absl::StatusOr<Channel> Create(ArithmeticChannel params);

  const ArithmeticChannel& params() const { return params_; }
  const QuotientRing& ring() const { return ring_; }
  std::uint64_t p() const { return params_.p; }
  std::uint64_t q() const { return params_.q; }
  std::size_t n() const { return params_.n; }
  std::size_t N() const { return params_.N; }
  std::size_t degree() const { return ring_.degree(); }

  // [[C]](v) = v(omega) mod q.
  std::uint64_t Eval(const RingPoly& v) const {
    return ring_.EvaluateAt(v, params_.omega);
  }
  absl::StatusOr<Residue> EvalChecked(const RingPoly& v) const;

  // A polynomial whose evaluation is `target`, with one pivot coefficient
  // solved for and the others uniform.
  RingPoly SampleWithImage(std::uint64_t target, RandomSource& rng) const;

  // A random element of I_k(C).
  RingPoly SampleVanishing(std::uint64_t k, RandomSource& rng) const;
  // A random r(m) with [[C]](r(m)) = m.
  RingPoly SampleErrorImage(const Residue& m, RandomSource& rng) const;
  bool InVanishingIdeal(const RingPoly& e, std::uint64_t k) const;

 private:
  Channel(ArithmeticChannel params, QuotientRing ring, std::uint64_t omega_inv)
      : params_(std::move(params)), ring_(std::move(ring)),
        omega_inv_(omega_inv) {}

  ArithmeticChannel params_;
  QuotientRing ring_;
  std::uint64_t omega_inv_;
};

}  // namespace aces

#endif  // ACES_CHANNEL_H_
