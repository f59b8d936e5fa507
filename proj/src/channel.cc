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

#include "aces/channel.h"

#include <algorithm>
#include <cctype>
#include <utility>

#include "absl/strings/escaping.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace aces {

std::vector<std::int64_t> MonomialMinusOne(std::size_t d) {
  std::vector<std::int64_t> u(d + 1, 0);
  u[0] = -1;
  u[d] = 1;
  return u;
}

ArithmeticChannel DeskParameters() { return ArithmeticChannel{}; }

ArithmeticChannel MicroParameters() {
  ArithmeticChannel ch;
  ch.q = 105;
  ch.u = MonomialMinusOne(2);
  ch.n = 2;
  ch.N = 1;
  return ch;
}

absl::Status ValidateChannel(const ArithmeticChannel& ch) {
  std::vector<std::string> violations;
  if (ch.p < 2) violations.push_back("p >= 2 violated");
  if (ch.p >= ch.q) violations.push_back("p < q violated");
  if (ch.q >= kMaxModulus) violations.push_back("q < 2^62 violated");
  if (ch.degree() < 2) violations.push_back("deg(u) >= 2 violated");
  if (ch.u.empty() || ch.u.back() != 1) violations.push_back("u monic violated");
  if (ch.n < 1) violations.push_back("n >= 1 violated");
  if (ch.N < 1) violations.push_back("N >= 1 violated");
  if (ch.k0 < 1) violations.push_back("k0 >= 1 violated");
  if (ch.q >= 2 && ch.q < kMaxModulus) {
    Int128 u_at_omega = 0;
    for (std::size_t i = ch.u.size(); i-- > 0;) {
      u_at_omega =
          (u_at_omega * static_cast<Int128>(ch.omega % ch.q) + ch.u[i]) % ch.q;
    }
    if (ReduceSigned(u_at_omega, ch.q) != 0) {
      violations.push_back("u(omega) != 0 mod q");
    }
    if (!InverseMod(ch.omega, ch.q).has_value()) {
      violations.push_back("omega invertible mod q violated");
    }
  }
  Uint128 bound = Uint128{ch.k0} * ch.p * ch.p * ch.N + 1;
  if (Uint128{ch.q} < bound) {
    violations.push_back("q >= k0*p^2*N+1 violated");
  }
  if (violations.empty()) return absl::OkStatus();
  return absl::InvalidArgumentError(
      absl::StrCat("invalid channel: ", absl::StrJoin(violations, "; ")));
}

RandomSource::RandomSource(std::string_view seed) {
  std::vector<std::uint32_t> words;
  words.reserve(seed.size() + 1);
  words.push_back(static_cast<std::uint32_t>(seed.size()));
  for (unsigned char c : seed) words.push_back(c);
  std::seed_seq seq(words.begin(), words.end());
  engine_.seed(seq);
}

RandomSource::RandomSource(std::uint64_t seed)
    : RandomSource(std::string_view(reinterpret_cast<const char*>(&seed),
                                    sizeof(seed))) {}

absl::StatusOr<RandomSource> RandomSource::FromHex(std::string_view hex) {
  const std::string text(hex);
  bool valid = !text.empty() && text.size() % 2 == 0 &&
               std::all_of(text.begin(), text.end(), [](unsigned char c) {
                 return std::isxdigit(c) != 0;
               });
  if (!valid) {
    return absl::InvalidArgumentError(
        absl::StrCat("seed is not an even-length hex string: ", text));
  }
  const std::string bytes = absl::HexStringToBytes(text);
  return RandomSource(std::string_view(bytes));
}

std::uint64_t RandomSource::Uniform(std::uint64_t bound) {
  ++draws_;
  return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(engine_);
}

std::uint64_t RandomSource::UniformIn(std::uint64_t lo, std::uint64_t hi) {
  ++draws_;
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(engine_);
}

absl::StatusOr<Channel> Channel::Create(ArithmeticChannel params) {
  if (absl::Status s = ValidateChannel(params); !s.ok()) return s;
  auto ring = QuotientRing::Create(params.q, params.u);
  if (!ring.ok()) return ring.status();
  std::uint64_t omega_inv = *InverseMod(params.omega, params.q);
  return Channel(std::move(params), *std::move(ring), omega_inv);
}

absl::StatusOr<Residue> Channel::EvalChecked(const RingPoly& v) const {
  if (!ring_.Owns(v)) {
    return absl::InvalidArgumentError("polynomial is not in the channel ring");
  }
  return Residue{Eval(v), q()};
}

RingPoly Channel::SampleWithImage(std::uint64_t target,
                                  RandomSource& rng) const {
  const std::uint64_t q = params_.q;
  const std::size_t d = degree();
  const std::size_t s = rng.UniformIn(1, d - 1);
  RingPoly r = ring_.Zero();
  // Sum of a_j * omega^j over the free coefficients.
  std::uint64_t partial = 0;
  std::uint64_t omega_pow = 1;
  for (std::size_t j = 0; j < d; ++j) {
    if (j != s) {
      r.coeffs[j] = rng.Uniform(q);
      partial = AddMod(partial, MulMod(r.coeffs[j], omega_pow, q), q);
    }
    omega_pow = MulMod(omega_pow, params_.omega, q);
  }
  r.coeffs[s] = MulMod(SubMod(target % q, partial, q),
                       PowMod(omega_inv_, s, q), q);
  return r;
}

RingPoly Channel::SampleVanishing(std::uint64_t k, RandomSource& rng) const {
  std::uint64_t top = std::min<std::uint64_t>(k, (params_.q - 1) / params_.p);
  std::uint64_t ell = rng.UniformIn(0, top);
  return SampleWithImage(params_.p * ell, rng);
}

RingPoly Channel::SampleErrorImage(const Residue& m, RandomSource& rng) const {
  return SampleWithImage(m.value % params_.q, rng);
}

bool Channel::InVanishingIdeal(const RingPoly& e, std::uint64_t k) const {
  return ChiMember(params_.p, k, Eval(e));
}

}  // namespace aces
