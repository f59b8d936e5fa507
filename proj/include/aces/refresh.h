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

// Refreshability tests and the refresh operation.

#ifndef ACES_REFRESH_H_
#define ACES_REFRESH_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "absl/status/statusor.h"
#include "aces/channel.h"
#include "aces/keys.h"

namespace aces {

struct Pseudociphertext {
  std::vector<std::uint64_t> v;
  std::uint64_t vprime = 0;

  friend bool operator==(const Pseudociphertext&,
                         const Pseudociphertext&) = default;
};

// (-[[C]](c_i), [[C]](c')).
Pseudociphertext MakePseudociphertext(const Channel& ch, const Ciphertext& ct);

// [[C]](c_i) for every component.
std::vector<std::uint64_t> LocatorOf(const Channel& ch, const Ciphertext& ct);

// The integer S = sum_i a_i * b_i kept as floor(S / q) and S mod q.
struct DotSplit {
  Uint128 quotient = 0;
  std::uint64_t remainder = 0;
};
DotSplit SplitDot(const std::vector<std::uint64_t>& a,
                  const std::vector<std::uint64_t>& b, std::uint64_t q);

// Numerator of marg_x(ell) over the denominator q.
std::uint64_t MarginNumerator(const Channel& ch, const SecretKey& sk,
                              const std::vector<std::uint64_t>& ell);

// k with sum_i X_i - floor(S/q) = k p, if any.
std::optional<std::uint64_t> IsLocator(const Channel& ch, const SecretKey& sk,
                                       const std::vector<std::uint64_t>& ell);

// k with floor(S/q) = k p, if any.
std::optional<std::uint64_t> IsDirector(
    const Channel& ch, const SecretKey& sk,
    const std::vector<std::uint64_t>& ell);

// k with iota(v') + iota<v>^T X = iota(v' + v^T X) + k p q, if any.
std::optional<std::uint64_t> IsRefreshablePseudo(const Channel& ch,
                                                 const SecretKey& sk,
                                                 const Pseudociphertext& pc);
std::optional<std::uint64_t> IsRefreshableSecret(const Channel& ch,
                                                 const SecretKey& sk,
                                                 const Ciphertext& ct);

// Sufficient condition for refreshability: ell = [[C]]<c> is a locator and
// p (k + 1) - 1 < q (1 - marg_x(ell)). Coordinates with ell_i = 0 negate to 0
// rather than q, so those must also satisfy sum X_i = 0 mod p.
bool TheoremTest(const Channel& ch, const SecretKey& sk, const Ciphertext& ct);

struct LocatorDbOptions {
  std::size_t locators = 64;
  std::size_t max_locator_draws = 100000;
  bool axis_directors = true;
};

// Secret-holder construction of the published locator database: sampled
// locators plus every single-coordinate director t * e_i.
absl::StatusOr<LocatorDb> BuildLocatorDb(const Channel& ch,
                                         const SecretKey& sk,
                                         RandomSource& rng,
                                         const LocatorDbOptions& opts = {});

struct LocatorCertificate {
  std::uint64_t k0 = 0;
  std::uint64_t margin_num = 0;
  // Number of directors combined with the base locator.
  std::size_t depth = 0;
};

// Lookup structure over a published database.
class LocatorIndex {
 public:
  LocatorIndex(const Channel& ch, const LocatorDb& db);

  // Searches ell = locator +- directors with at most `depth_budget`
  // directors. nullopt means unknown, never "not a locator".
  std::optional<LocatorCertificate> Certify(
      const std::vector<std::uint64_t>& ell, std::size_t depth_budget) const;

 private:
  struct Term {
    const LocatorEntry* entry;
    int sign;
  };
  std::optional<LocatorCertificate> Combine(
      const LocatorEntry& base, const std::vector<Term>& terms,
      const std::vector<std::uint64_t>& target) const;

  std::uint64_t p_;
  std::uint64_t q_;
  std::vector<const LocatorEntry*> locators_;
  absl::flat_hash_map<std::vector<std::uint64_t>, const LocatorEntry*> exact_;
  absl::flat_hash_map<std::pair<std::size_t, std::uint64_t>,
                      const LocatorEntry*>
      axis_;
};

std::optional<LocatorCertificate> PublicRefreshTest(
    const LocatorDb& db, const Channel& ch, const Ciphertext& ct,
    std::size_t depth_budget);

// Public decision: certified locator, no zero component, and the
// margin inequality at the ciphertext's level.
bool PubliclyRefreshable(const LocatorIndex& index, const Channel& ch,
                         const Ciphertext& ct, std::size_t depth_budget);

// kappa* + kappa^*, the level of every refreshed ciphertext, or nullopt on
// overflow.
std::optional<std::uint64_t> RefreshedLevel(const Channel& ch,
                                            const Refresher& refresher);

// c2 (+) (gamma (.) rho) built from the public digits of `ct`.
absl::StatusOr<Ciphertext> RefreshCt(const Channel& ch,
                                     const PublicMaterial& pub,
                                     const Ciphertext& ct, RandomSource& rng);

struct RefreshOutcome {
  Ciphertext ct;
  // Fresh encryptions of 0 added before the public test passed.
  int rerandomizations = 0;
  LocatorCertificate certificate;
};

// Adds public encryptions of 0 until the public test passes, then refreshes.
absl::StatusOr<RefreshOutcome> RefreshWithRetry(
    const Channel& ch, const PublicMaterial& pub, const LocatorIndex& index,
    const Ciphertext& ct, RandomSource& rng, int max_attempts = 64);

}  // namespace aces

#endif  // ACES_REFRESH_H_
