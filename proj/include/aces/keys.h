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

// Plain data types for key material and ciphertexts.

#ifndef ACES_KEYS_H_
#define ACES_KEYS_H_

#include <cstdint>
#include <vector>

#include "aces/ring.h"

namespace aces {

struct SecretKey {
  std::vector<RingPoly> x;

  friend bool operator==(const SecretKey&, const SecretKey&) = default;
};

struct PublicKey {
  // N rows of n entries.
  std::vector<std::vector<RingPoly>> f0;
  std::vector<RingPoly> fprime;

  friend bool operator==(const PublicKey&, const PublicKey&) = default;
};

// lambda^k_{i,j} stored densely, k fastest.
class LambdaTensor {
 public:
  LambdaTensor() = default;
  explicit LambdaTensor(std::size_t n) : n_(n), data_(n * n * n, 0) {}

  std::size_t n() const { return n_; }
  std::uint64_t at(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * n_ + j) * n_ + k];
  }
  std::uint64_t& at(std::size_t i, std::size_t j, std::size_t k) {
    return data_[(i * n_ + j) * n_ + k];
  }
  const std::vector<std::uint64_t>& data() const { return data_; }

  friend bool operator==(const LambdaTensor&, const LambdaTensor&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> data_;
};

struct Ciphertext {
  std::vector<RingPoly> c;
  RingPoly cprime;
  std::uint64_t level = 0;

  friend bool operator==(const Ciphertext&, const Ciphertext&) = default;
};

struct Refresher {
  std::vector<std::uint64_t> kappa;
  std::vector<Ciphertext> rho;

  friend bool operator==(const Refresher&, const Refresher&) = default;
};

enum class LocatorKind { kLocator, kDirector };

struct LocatorEntry {
  std::vector<std::uint64_t> vec;
  LocatorKind kind = LocatorKind::kLocator;
  std::uint64_t k = 0;
  // The margin is margin_num / q.
  std::uint64_t margin_num = 0;

  friend bool operator==(const LocatorEntry&, const LocatorEntry&) = default;
};

struct LocatorDb {
  std::vector<LocatorEntry> entries;

  friend bool operator==(const LocatorDb&, const LocatorDb&) = default;
};

// Everything an evaluator needs, without the secret.
struct PublicMaterial {
  Repartition rep;
  PublicKey pk;
  LambdaTensor lambda;
  Refresher refresher;
  LocatorDb db;

  friend bool operator==(const PublicMaterial&,
                         const PublicMaterial&) = default;
};

struct KeyBundle {
  Repartition rep;
  SecretKey sk;
  PublicKey pk;
  LambdaTensor lambda;
  Refresher refresher;

  friend bool operator==(const KeyBundle&, const KeyBundle&) = default;
};

}  // namespace aces

#endif  // ACES_KEYS_H_
