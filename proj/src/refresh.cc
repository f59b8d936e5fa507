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

#include "aces/refresh.h"

#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "aces/cipher.h"
#include "aces/homomorphic.h"
#include "aces/keygen.h"

namespace aces {

Pseudociphertext MakePseudociphertext(const Channel& ch,
                                      const Ciphertext& ct) {
  Pseudociphertext pc;
  pc.v.reserve(ct.c.size());
  for (const RingPoly& ci : ct.c) pc.v.push_back(NegMod(ch.Eval(ci), ch.q()));
  pc.vprime = ch.Eval(ct.cprime);
  return pc;
}

std::vector<std::uint64_t> LocatorOf(const Channel& ch, const Ciphertext& ct) {
  std::vector<std::uint64_t> ell;
  ell.reserve(ct.c.size());
  for (const RingPoly& ci : ct.c) ell.push_back(ch.Eval(ci));
  return ell;
}

DotSplit SplitDot(const std::vector<std::uint64_t>& a,
                  const std::vector<std::uint64_t>& b, std::uint64_t q) {
  DotSplit out;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    Uint128 prod = Uint128{a[i]} * b[i];
    out.quotient += prod / q;
    out.remainder += static_cast<std::uint64_t>(prod % q);
    if (out.remainder >= q) {
      out.remainder -= q;
      out.quotient += 1;
    }
  }
  return out;
}

std::uint64_t MarginNumerator(const Channel& ch, const SecretKey& sk,
                              const std::vector<std::uint64_t>& ell) {
  return SplitDot(ell, SecretImages(ch, sk), ch.q()).remainder;
}

std::optional<std::uint64_t> IsLocator(const Channel& ch, const SecretKey& sk,
                                       const std::vector<std::uint64_t>& ell) {
  std::vector<std::uint64_t> images = SecretImages(ch, sk);
  Uint128 total = 0;
  for (std::uint64_t x : images) total += x;
  Uint128 floor = SplitDot(ell, images, ch.q()).quotient;
  if (floor > total) return std::nullopt;
  Uint128 diff = total - floor;
  if (diff % ch.p() != 0) return std::nullopt;
  return static_cast<std::uint64_t>(diff / ch.p());
}

std::optional<std::uint64_t> IsDirector(
    const Channel& ch, const SecretKey& sk,
    const std::vector<std::uint64_t>& ell) {
  Uint128 floor = SplitDot(ell, SecretImages(ch, sk), ch.q()).quotient;
  if (floor % ch.p() != 0) return std::nullopt;
  return static_cast<std::uint64_t>(floor / ch.p());
}

std::optional<std::uint64_t> IsRefreshablePseudo(const Channel& ch,
                                                 const SecretKey& sk,
                                                 const Pseudociphertext& pc) {
  DotSplit lhs = SplitDot(pc.v, SecretImages(ch, sk), ch.q());
  lhs.remainder += pc.vprime;
  if (lhs.remainder >= ch.q()) {
    lhs.remainder -= ch.q();
    lhs.quotient += 1;
  }
  // lhs - iota(v' + v^T X) is exactly q * quotient.
  if (lhs.quotient % ch.p() != 0) return std::nullopt;
  return static_cast<std::uint64_t>(lhs.quotient / ch.p());
}

std::optional<std::uint64_t> IsRefreshableSecret(const Channel& ch,
                                                 const SecretKey& sk,
                                                 const Ciphertext& ct) {
  return IsRefreshablePseudo(ch, sk, MakePseudociphertext(ch, ct));
}

bool TheoremTest(const Channel& ch, const SecretKey& sk,
                 const Ciphertext& ct) {
  std::vector<std::uint64_t> ell = LocatorOf(ch, ct);
  if (!IsLocator(ch, sk, ell).has_value()) return false;
  std::vector<std::uint64_t> images = SecretImages(ch, sk);
  Uint128 zero_sum = 0;
  for (std::size_t i = 0; i < ell.size(); ++i) {
    if (ell[i] == 0) zero_sum += images[i];
  }
  if (zero_sum % ch.p() != 0) return false;
  Uint128 lhs = Uint128{ch.p()} * (Uint128{ct.level} + 1) - 1 +
                MarginNumerator(ch, sk, ell);
  return lhs < ch.q();
}

absl::StatusOr<LocatorDb> BuildLocatorDb(const Channel& ch,
                                         const SecretKey& sk,
                                         RandomSource& rng,
                                         const LocatorDbOptions& opts) {
  const std::uint64_t q = ch.q();
  LocatorDb db;
  std::size_t draws = 0;
  while (db.entries.size() < opts.locators) {
    if (draws++ >= opts.max_locator_draws) {
      return absl::ResourceExhaustedError(absl::StrCat(
          "locator database: only ", db.entries.size(), " locators after ",
          opts.max_locator_draws, " draws"));
    }
    std::vector<std::uint64_t> ell(ch.n());
    for (std::uint64_t& e : ell) e = rng.UniformIn(1, q - 1);
    auto k = IsLocator(ch, sk, ell);
    if (!k.has_value()) continue;
    std::uint64_t margin = MarginNumerator(ch, sk, ell);
    db.entries.push_back(
        LocatorEntry{std::move(ell), LocatorKind::kLocator, *k, margin});
  }
  if (opts.axis_directors) {
    for (std::size_t i = 0; i < ch.n(); ++i) {
      for (std::uint64_t t = 1; t < q; ++t) {
        std::vector<std::uint64_t> delta(ch.n(), 0);
        delta[i] = t;
        auto k = IsDirector(ch, sk, delta);
        if (!k.has_value()) continue;
        std::uint64_t margin = MarginNumerator(ch, sk, delta);
        db.entries.push_back(
            LocatorEntry{std::move(delta), LocatorKind::kDirector, *k, margin});
      }
    }
  }
  return db;
}

LocatorIndex::LocatorIndex(const Channel& ch, const LocatorDb& db)
    : p_(ch.p()), q_(ch.q()) {
  for (const LocatorEntry& e : db.entries) {
    exact_.try_emplace(e.vec, &e);
    if (e.kind == LocatorKind::kLocator) {
      locators_.push_back(&e);
      continue;
    }
    std::size_t nonzero = 0, axis = 0;
    for (std::size_t i = 0; i < e.vec.size(); ++i) {
      if (e.vec[i] != 0) {
        ++nonzero;
        axis = i;
      }
    }
    if (nonzero == 1) axis_.try_emplace(std::make_pair(axis, e.vec[axis]), &e);
  }
}

std::optional<LocatorCertificate> LocatorIndex::Combine(
    const LocatorEntry& base, const std::vector<Term>& terms,
    const std::vector<std::uint64_t>& target) const {
  const std::size_t n = target.size();
  if (base.vec.size() != n) return std::nullopt;
  // The integer combination must land in [0, q) and equal the target.
  for (std::size_t i = 0; i < n; ++i) {
    Int128 v = base.vec[i];
    for (const Term& t : terms) {
      if (t.entry->vec.size() != n) return std::nullopt;
      v += t.sign * static_cast<Int128>(t.entry->vec[i]);
    }
    if (v < 0 || v >= static_cast<Int128>(q_) ||
        static_cast<std::uint64_t>(v) != target[i]) {
      return std::nullopt;
    }
  }
  Int128 num = base.margin_num;
  Int128 index = base.k;
  for (const Term& t : terms) {
    num += t.sign * static_cast<Int128>(t.entry->margin_num);
    index -= t.sign * static_cast<Int128>(t.entry->k);
  }
  if (num < 0) return std::nullopt;
  Int128 whole = num / static_cast<Int128>(q_);
  if (whole % static_cast<Int128>(p_) != 0) return std::nullopt;
  Int128 k_prime = whole / static_cast<Int128>(p_);
  index -= k_prime;
  if (index < 0) return std::nullopt;
  return LocatorCertificate{
      static_cast<std::uint64_t>(index),
      static_cast<std::uint64_t>(num - k_prime * p_ * q_), terms.size()};
}

std::optional<LocatorCertificate> LocatorIndex::Certify(
    const std::vector<std::uint64_t>& ell, std::size_t depth_budget) const {
  if (auto it = exact_.find(ell);
      it != exact_.end() && it->second->kind == LocatorKind::kLocator) {
    return LocatorCertificate{it->second->k, it->second->margin_num, 0};
  }
  const std::size_t n = ell.size();
  for (const LocatorEntry* base : locators_) {
    if (base->vec.size() != n) continue;
    std::vector<Int128> diff(n);
    std::vector<std::uint64_t> magnitude(n);
    bool all_non_neg = true, all_non_pos = true;
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < n; ++i) {
      diff[i] = static_cast<Int128>(ell[i]) - base->vec[i];
      magnitude[i] = static_cast<std::uint64_t>(diff[i] < 0 ? -diff[i]
                                                            : diff[i]);
      if (diff[i] < 0) all_non_neg = false;
      if (diff[i] > 0) all_non_pos = false;
      if (diff[i] != 0) ++nonzero;
    }
    if (nonzero == 0) continue;
    if (depth_budget >= 1 && (all_non_neg || all_non_pos)) {
      auto it = exact_.find(magnitude);
      if (it != exact_.end() && it->second->kind == LocatorKind::kDirector) {
        auto cert = Combine(*base, {{it->second, all_non_neg ? 1 : -1}}, ell);
        if (cert.has_value()) return cert;
      }
    }
    if (nonzero > depth_budget || nonzero == 1) continue;
    std::vector<Term> terms;
    for (std::size_t i = 0; i < n && terms.size() < nonzero; ++i) {
      if (diff[i] == 0) continue;
      auto it = axis_.find(std::make_pair(i, magnitude[i]));
      if (it == axis_.end()) break;
      terms.push_back({it->second, diff[i] > 0 ? 1 : -1});
    }
    if (terms.size() != nonzero) continue;
    auto cert = Combine(*base, terms, ell);
    if (cert.has_value()) return cert;
  }
  return std::nullopt;
}

std::optional<LocatorCertificate> PublicRefreshTest(const LocatorDb& db,
                                                    const Channel& ch,
                                                    const Ciphertext& ct,
                                                    std::size_t depth_budget) {
  return LocatorIndex(ch, db).Certify(LocatorOf(ch, ct), depth_budget);
}

bool PubliclyRefreshable(const LocatorIndex& index, const Channel& ch,
                         const Ciphertext& ct, std::size_t depth_budget) {
  std::vector<std::uint64_t> ell = LocatorOf(ch, ct);
  for (std::uint64_t e : ell) {
    if (e == 0) return false;
  }
  auto cert = index.Certify(ell, depth_budget);
  if (!cert.has_value()) return false;
  Uint128 lhs = Uint128{ch.p()} * (Uint128{ct.level} + 1) - 1 +
                cert->margin_num;
  return lhs < ch.q();
}

std::optional<std::uint64_t> RefreshedLevel(const Channel& ch,
                                            const Refresher& refresher) {
  const Uint128 p = ch.p();
  const Uint128 fresh = FreshLevel(ch);
  Uint128 kappa_star = fresh;
  for (std::uint64_t kappa : refresher.kappa) {
    kappa_star += p * (Uint128{kappa} + fresh + Uint128{kappa} * fresh);
  }
  const Uint128 n = refresher.kappa.size();
  Uint128 kappa_hat = ((p - 1) + n * (p - 1) * (p - 1)) / p;
  if (kappa_star * p >= ch.q()) return std::nullopt;
  Uint128 total = kappa_star + kappa_hat;
  if (total > ~std::uint64_t{0}) return std::nullopt;
  return static_cast<std::uint64_t>(total);
}

absl::StatusOr<Ciphertext> RefreshCt(const Channel& ch,
                                     const PublicMaterial& pub,
                                     const Ciphertext& ct,
                                     RandomSource& rng) {
  if (absl::Status s = CheckCiphertextShape(ch, ct); !s.ok()) return s;
  if (!IsDecryptable(ch, ct.level)) {
    return absl::FailedPreconditionError(absl::StrCat(
        "refresh refused: level ", ct.level,
        " violates k < (q+1)/p - 1 (max ", MaxDecryptableLevel(ch), ")"));
  }
  if (pub.refresher.rho.size() != ch.n() ||
      pub.refresher.kappa.size() != ch.n()) {
    return absl::InvalidArgumentError("refresher does not have n entries");
  }
  auto target_level = RefreshedLevel(ch, pub.refresher);
  if (!target_level.has_value()) {
    return absl::FailedPreconditionError(
        "refresh refused: kappa* < q/p violated");
  }
  const std::uint64_t p = ch.p();
  std::vector<Ciphertext> gamma;
  gamma.reserve(ch.n());
  for (std::size_t i = 0; i < ch.n(); ++i) {
    std::uint64_t digit = NegMod(ch.Eval(ct.c[i]), ch.q()) % p;
    auto enc = Encrypt(ch, pub.rep, pub.pk, Residue{digit, p}, rng);
    if (!enc.ok()) return enc.status();
    gamma.push_back(*std::move(enc));
  }
  auto c2 = Encrypt(ch, pub.rep, pub.pk, Residue{ch.Eval(ct.cprime) % p, p},
                    rng);
  if (!c2.ok()) return c2.status();
  auto product = ScalarProduct(ch, pub.lambda, gamma, pub.refresher.rho);
  if (!product.ok()) return product.status();
  auto out = HomAdd(ch, *c2, *product);
  if (!out.ok()) return out.status();
  // The digit sum may exceed p; the quotient is charged to the level.
  out->level = *target_level;
  return out;
}

absl::StatusOr<RefreshOutcome> RefreshWithRetry(const Channel& ch,
                                                const PublicMaterial& pub,
                                                const LocatorIndex& index,
                                                const Ciphertext& ct,
                                                RandomSource& rng,
                                                int max_attempts) {
  Ciphertext current = ct;
  for (int attempt = 0; attempt <= max_attempts; ++attempt) {
    if (PubliclyRefreshable(index, ch, current, ch.n())) {
      auto cert = index.Certify(LocatorOf(ch, current), ch.n());
      auto refreshed = RefreshCt(ch, pub, current, rng);
      if (!refreshed.ok()) return refreshed.status();
      return RefreshOutcome{*std::move(refreshed), attempt, *cert};
    }
    if (attempt == max_attempts) break;
    auto zero = Encrypt(ch, pub.rep, pub.pk, Residue{0, ch.p()}, rng);
    if (!zero.ok()) return zero.status();
    auto sum = HomAdd(ch, current, *zero);
    if (!sum.ok() || !IsDecryptable(ch, sum->level)) {
      return absl::FailedPreconditionError(absl::StrCat(
          "ciphertext at level ", current.level,
          " is not publicly refreshable and rerandomization exhausts the "
          "noise budget"));
    }
    current = *std::move(sum);
  }
  return absl::FailedPreconditionError(absl::StrCat(
      "ciphertext at level ", ct.level, " not publicly refreshable after ",
      max_attempts, " rerandomizations"));
}

}  // namespace aces
