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

#include "aces/keygen.h"

#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "aces/cipher.h"

namespace aces {
namespace {

struct ExtendedGcd {
  BigInt g, s, t;
};

// s * a + t * b = g with g = gcd(a, b) >= 0.
ExtendedGcd ExtGcd(const BigInt& a, const BigInt& b) {
  BigInt old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    BigInt quot = old_r / r;
    BigInt tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
    tmp = old_t - quot * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

std::uint64_t ReduceBig(const BigInt& z, std::uint64_t q) {
  BigInt r = z % q;
  if (r < 0) r += q;
  return r.convert_to<std::uint64_t>();
}

}  // namespace

std::vector<std::uint64_t> SecretImages(const Channel& ch,
                                        const SecretKey& sk) {
  std::vector<std::uint64_t> out;
  out.reserve(sk.x.size());
  for (const RingPoly& xi : sk.x) out.push_back(ch.Eval(xi));
  return out;
}

std::vector<std::uint64_t> BezoutInputs(const Channel& ch,
                                        const Repartition& rep,
                                        const SecretKey& sk) {
  std::vector<std::uint64_t> a = SecretImages(ch, sk);
  for (std::size_t k = 0; k < a.size(); ++k) a[k] *= rep.PrimeFor(k);
  return a;
}

std::optional<std::vector<BigInt>> BezoutCoefficients(
    const std::vector<std::uint64_t>& a) {
  std::vector<BigInt> mu(a.size(), 0);
  BigInt g = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] == 0) continue;
    ExtendedGcd e = ExtGcd(g, BigInt(a[k]));
    for (std::size_t j = 0; j < k; ++j) mu[j] *= e.s;
    mu[k] = e.t;
    g = e.g;
  }
  if (g != 1) return std::nullopt;
  return mu;
}

absl::StatusOr<Repartition> SampleRepartition(const Channel& ch,
                                              RandomSource& rng) {
  std::size_t n0 = Factorize(ch.q()).size();
  std::vector<int> sigma(ch.n());
  for (int& s : sigma) s = static_cast<int>(rng.UniformIn(0, n0));
  return Repartition::Create(ch.q(), std::move(sigma));
}

absl::StatusOr<SecretKey> GenSecret(const Channel& ch, const Repartition& rep,
                                    RandomSource& rng,
                                    const KeyGenOptions& opts) {
  if (rep.size() != ch.n() || rep.modulus() != ch.q()) {
    return absl::InvalidArgumentError("repartition does not match channel");
  }
  for (int attempt = 0; attempt < opts.secret_attempts; ++attempt) {
    SecretKey sk;
    sk.x.reserve(ch.n());
    for (std::size_t i = 0; i < ch.n(); ++i) {
      RingPoly xi = ch.ring().Zero();
      for (std::uint64_t& c : xi.coeffs) c = rng.Uniform(ch.q());
      sk.x.push_back(std::move(xi));
    }
    std::uint64_t g = 0;
    for (std::uint64_t a : BezoutInputs(ch, rep, sk)) g = Gcd(g, a);
    if (g == 1) return sk;
  }
  return absl::ResourceExhaustedError(absl::StrCat(
      "secret key generation: gcd condition not met after ",
      opts.secret_attempts, " attempts"));
}

std::vector<std::vector<RingPoly>> GenInitializer(const Channel& ch,
                                                  const Repartition& rep,
                                                  RandomSource& rng) {
  std::vector<std::vector<RingPoly>> f0(ch.N());
  for (auto& row : f0) {
    row.reserve(ch.n());
    for (std::size_t j = 0; j < ch.n(); ++j) {
      row.push_back(SampleSigmaComponent(ch, rep, j, rng));
    }
  }
  return f0;
}

absl::StatusOr<PublicKey> GenPublic(const Channel& ch, const SecretKey& sk,
                                    std::vector<std::vector<RingPoly>> f0,
                                    RandomSource& rng) {
  if (sk.x.size() != ch.n() || f0.size() != ch.N()) {
    return absl::InvalidArgumentError("key dimensions do not match channel");
  }
  const QuotientRing& ring = ch.ring();
  PublicKey pk;
  pk.fprime.reserve(ch.N());
  for (const auto& row : f0) {
    if (row.size() != ch.n()) {
      return absl::InvalidArgumentError("initializer row has wrong length");
    }
    RingPoly acc = ch.SampleVanishing(ch.params().k0, rng);
    for (std::size_t j = 0; j < ch.n(); ++j) {
      acc = ring.Add(acc, ring.Mul(row[j], sk.x[j]));
    }
    pk.fprime.push_back(std::move(acc));
  }
  pk.f0 = std::move(f0);
  return pk;
}

absl::StatusOr<LambdaTensor> GenLambda(const Channel& ch,
                                       const Repartition& rep,
                                       const SecretKey& sk, RandomSource& rng,
                                       const KeyGenOptions& opts) {
  const std::uint64_t q = ch.q();
  const std::size_t n = ch.n();
  auto mu_big = BezoutCoefficients(BezoutInputs(ch, rep, sk));
  if (!mu_big.has_value()) {
    return absl::FailedPreconditionError(
        "lambda generation: gcd of q_sigma(k) * X_k is not 1");
  }
  std::vector<std::uint64_t> images = SecretImages(ch, sk);
  // q_{sigma(k)} * mu_k mod q.
  std::vector<std::uint64_t> scale(n);
  for (std::size_t k = 0; k < n; ++k) {
    scale[k] = MulMod(rep.PrimeFor(k) % q, ReduceBig((*mu_big)[k], q), q);
  }
  LambdaTensor lam(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      auto weight = rep.Weight(i, j);
      if (!weight.ok()) return weight.status();
      std::uint64_t xx = MulMod(images[i], images[j], q);
      bool placed = false;
      for (int attempt = 0; attempt < opts.lambda_attempts && !placed;
           ++attempt) {
        std::uint64_t ell = rng.Uniform(q);
        std::uint64_t base = SubMod(xx, MulMod(ell, *weight % q, q), q);
        bool unit_i = true, unit_j = true;
        for (std::size_t k = 0; k < n; ++k) {
          std::uint64_t v = MulMod(scale[k], base, q);
          lam.at(i, j, k) = v;
          lam.at(j, i, k) = v;
          if (v != (k == j ? images[i] : 0)) unit_i = false;
          if (v != (k == i ? images[j] : 0)) unit_j = false;
        }
        placed = !unit_i && !unit_j;
      }
      if (!placed) {
        return absl::ResourceExhaustedError(absl::StrCat(
            "lambda generation: only degenerate tensors found for pair (", i,
            ",", j, ")"));
      }
    }
  }
  return lam;
}

absl::StatusOr<Refresher> GenRefresher(const Channel& ch,
                                       const Repartition& rep,
                                       const SecretKey& sk,
                                       RandomSource& rng) {
  Refresher out;
  std::vector<std::uint64_t> images = SecretImages(ch, sk);
  for (std::size_t i = 0; i < images.size(); ++i) {
    constexpr std::uint64_t kKappa = 1;
    Residue digit{images[i] % ch.p(), ch.q()};
    auto rho = EncryptWithSecret(ch, rep, sk, digit, kKappa, rng);
    if (!rho.ok()) return rho.status();
    out.kappa.push_back(kKappa);
    out.rho.push_back(*std::move(rho));
  }
  return out;
}

absl::StatusOr<KeyBundle> KeyGen(const Channel& ch, RandomSource& rng,
                                 const KeyGenOptions& opts) {
  absl::Status last = absl::OkStatus();
  for (int attempt = 0; attempt < opts.repartition_attempts; ++attempt) {
    auto rep = SampleRepartition(ch, rng);
    if (!rep.ok()) return rep.status();
    auto sk = GenSecret(ch, *rep, rng, opts);
    if (!sk.ok()) {
      last = sk.status();
      continue;
    }
    KeyBundle bundle;
    bundle.rep = *std::move(rep);
    bundle.sk = *std::move(sk);
    auto pk = GenPublic(ch, bundle.sk, GenInitializer(ch, bundle.rep, rng),
                        rng);
    if (!pk.ok()) return pk.status();
    bundle.pk = *std::move(pk);
    auto lam = GenLambda(ch, bundle.rep, bundle.sk, rng, opts);
    if (absl::IsResourceExhausted(lam.status())) {
      // Degenerate for this (sigma, x); draw a new pair.
      last = lam.status();
      continue;
    }
    if (!lam.ok()) return lam.status();
    bundle.lambda = *std::move(lam);
    auto refresher = GenRefresher(ch, bundle.rep, bundle.sk, rng);
    if (!refresher.ok()) return refresher.status();
    bundle.refresher = *std::move(refresher);
    return bundle;
  }
  return absl::ResourceExhaustedError(absl::StrCat(
      "key generation failed for every sampled repartition: ",
      last.message()));
}

}  // namespace aces
