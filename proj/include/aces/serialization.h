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

// JSON encodings of channels, keys, ciphertexts and locator databases.
// Integers that may exceed 53 bits are written as decimal strings.

#ifndef ACES_SERIALIZATION_H_
#define ACES_SERIALIZATION_H_

#include <string>
#include <string_view>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "aces/channel.h"
#include "aces/keys.h"

namespace aces {

std::string SerializeChannel(const ArithmeticChannel& ch);
absl::StatusOr<ArithmeticChannel> ParseChannel(std::string_view text);

std::string SerializeCiphertext(const Ciphertext& ct);
// Structural parse only; use CheckCiphertextShape against a channel.
absl::StatusOr<Ciphertext> ParseCiphertext(std::string_view text);

std::string SerializeSecretKey(const SecretKey& sk);
absl::StatusOr<SecretKey> ParseSecretKey(std::string_view text,
                                         const Channel& ch);

std::string SerializeLocatorDb(const LocatorDb& db);
absl::StatusOr<LocatorDb> ParseLocatorDb(std::string_view text,
                                         const Channel& ch);

std::string SerializePublicMaterial(const PublicMaterial& pub);
absl::StatusOr<PublicMaterial> ParsePublicMaterial(std::string_view text,
                                                   const Channel& ch);

absl::StatusOr<std::string> ReadFile(const std::string& path);
absl::Status WriteFile(const std::string& path, std::string_view contents);

}  // namespace aces

#endif  // ACES_SERIALIZATION_H_
