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

#include "aces/serialization.h"

#include <fstream>
#include <sstream>
#include <utility>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "json.hpp"

namespace aces {
namespace {

using Json = nlohmann::ordered_json;

// Thrown internally and converted to a Status at the API boundary.
struct FormatError {
  std::string message;
};

std::string Dec(std::uint64_t v) { return std::to_string(v); }

std::uint64_t U64(const Json& j, const char* what) {
  std::uint64_t v = 0;
  if (j.is_string()) {
    if (absl::SimpleAtoi(j.get<std::string>(), &v)) return v;
  } else if (j.is_number_unsigned()) {
    return j.get<std::uint64_t>();
  }
  throw FormatError{absl::StrCat(what, ": expected a non-negative integer")};
}

std::int64_t I64(const Json& j, const char* what) {
  std::int64_t v = 0;
  if (j.is_string()) {
    if (absl::SimpleAtoi(j.get<std::string>(), &v)) return v;
  } else if (j.is_number_integer()) {
    return j.get<std::int64_t>();
  }
  throw FormatError{absl::StrCat(what, ": expected an integer")};
}

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw FormatError{absl::StrCat("missing field \"", key, "\"")};
  }
  return j.at(key);
}

const Json& Array(const Json& j, const char* what) {
  if (!j.is_array()) throw FormatError{absl::StrCat(what, ": expected array")};
  return j;
}

Json U64Array(const std::vector<std::uint64_t>& v) {
  Json out = Json::array();
  for (std::uint64_t x : v) out.push_back(Dec(x));
  return out;
}

std::vector<std::uint64_t> ParseU64Array(const Json& j, const char* what) {
  std::vector<std::uint64_t> out;
  for (const Json& e : Array(j, what)) out.push_back(U64(e, what));
  return out;
}

Json PolyJson(const RingPoly& v) { return U64Array(v.coeffs); }

RingPoly ParsePoly(const Json& j, const char* what) {
  return RingPoly{ParseU64Array(j, what)};
}

RingPoly ParsePolyIn(const Json& j, const char* what, const Channel& ch) {
  RingPoly v = ParsePoly(j, what);
  if (!ch.ring().Owns(v)) {
    throw FormatError{absl::StrCat(what, ": not a canonical ring element")};
  }
  return v;
}

Json PolyVecJson(const std::vector<RingPoly>& v) {
  Json out = Json::array();
  for (const RingPoly& e : v) out.push_back(PolyJson(e));
  return out;
}

Json CiphertextJson(const Ciphertext& ct) {
  Json j = Json::object();
  j["c"] = PolyVecJson(ct.c);
  j["cprime"] = PolyJson(ct.cprime);
  j["level"] = ct.level;
  return j;
}

Ciphertext CiphertextFrom(const Json& j) {
  Ciphertext ct;
  for (const Json& e : Array(Field(j, "c"), "c")) {
    ct.c.push_back(ParsePoly(e, "c"));
  }
  ct.cprime = ParsePoly(Field(j, "cprime"), "cprime");
  ct.level = U64(Field(j, "level"), "level");
  return ct;
}

Json LocatorDbJson(const LocatorDb& db) {
  Json out = Json::array();
  for (const LocatorEntry& e : db.entries) {
    Json j = Json::object();
    j["vec"] = U64Array(e.vec);
    j["kind"] = e.kind == LocatorKind::kLocator ? "locator" : "director";
    j["k"] = e.k;
    j["margin_num"] = Dec(e.margin_num);
    out.push_back(std::move(j));
  }
  return out;
}

LocatorDb LocatorDbFrom(const Json& j, const Channel& ch) {
  LocatorDb db;
  for (const Json& e : Array(j, "locator_db")) {
    LocatorEntry entry;
    entry.vec = ParseU64Array(Field(e, "vec"), "vec");
    if (entry.vec.size() != ch.n()) {
      throw FormatError{"locator_db: vector length differs from n"};
    }
    for (std::uint64_t v : entry.vec) {
      if (v >= ch.q()) throw FormatError{"locator_db: entry not below q"};
    }
    const Json& kind = Field(e, "kind");
    if (kind == "locator") {
      entry.kind = LocatorKind::kLocator;
    } else if (kind == "director") {
      entry.kind = LocatorKind::kDirector;
    } else {
      throw FormatError{"locator_db: kind must be locator or director"};
    }
    entry.k = U64(Field(e, "k"), "k");
    entry.margin_num = U64(Field(e, "margin_num"), "margin_num");
    if (entry.margin_num >= ch.q()) {
      throw FormatError{"locator_db: margin_num must be below q"};
    }
    db.entries.push_back(std::move(entry));
  }
  return db;
}

template <typename F>
auto Guarded(F&& body) -> absl::StatusOr<decltype(body())> {
  try {
    return body();
  } catch (const FormatError& e) {
    return absl::InvalidArgumentError(e.message);
  } catch (const Json::exception& e) {
    return absl::InvalidArgumentError(absl::StrCat("malformed JSON: ", e.what()));
  }
}

Json ParseJson(std::string_view text) { return Json::parse(text); }

}  // namespace

std::string SerializeChannel(const ArithmeticChannel& ch) {
  Json j = Json::object();
  j["p"] = Dec(ch.p);
  j["q"] = Dec(ch.q);
  j["omega"] = Dec(ch.omega);
  Json u = Json::array();
  for (std::int64_t c : ch.u) u.push_back(std::to_string(c));
  j["u"] = std::move(u);
  j["n"] = Dec(ch.n);
  j["N"] = Dec(ch.N);
  j["k0"] = Dec(ch.k0);
  return j.dump() + "\n";
}

absl::StatusOr<ArithmeticChannel> ParseChannel(std::string_view text) {
  return Guarded([&] {
    Json j = ParseJson(text);
    ArithmeticChannel ch;
    ch.p = U64(Field(j, "p"), "p");
    ch.q = U64(Field(j, "q"), "q");
    ch.omega = U64(Field(j, "omega"), "omega");
    ch.u.clear();
    for (const Json& c : Array(Field(j, "u"), "u")) ch.u.push_back(I64(c, "u"));
    ch.n = U64(Field(j, "n"), "n");
    ch.N = U64(Field(j, "N"), "N");
    ch.k0 = U64(Field(j, "k0"), "k0");
    return ch;
  });
}

std::string SerializeCiphertext(const Ciphertext& ct) {
  return CiphertextJson(ct).dump() + "\n";
}

absl::StatusOr<Ciphertext> ParseCiphertext(std::string_view text) {
  return Guarded([&] { return CiphertextFrom(ParseJson(text)); });
}

std::string SerializeSecretKey(const SecretKey& sk) {
  Json j = Json::object();
  j["secret"] = PolyVecJson(sk.x);
  return j.dump() + "\n";
}

absl::StatusOr<SecretKey> ParseSecretKey(std::string_view text,
                                         const Channel& ch) {
  return Guarded([&] {
    Json j = ParseJson(text);
    SecretKey sk;
    for (const Json& e : Array(Field(j, "secret"), "secret")) {
      sk.x.push_back(ParsePolyIn(e, "secret", ch));
    }
    if (sk.x.size() != ch.n()) throw FormatError{"secret: length differs from n"};
    return sk;
  });
}

std::string SerializeLocatorDb(const LocatorDb& db) {
  return LocatorDbJson(db).dump() + "\n";
}

absl::StatusOr<LocatorDb> ParseLocatorDb(std::string_view text,
                                         const Channel& ch) {
  return Guarded([&] { return LocatorDbFrom(ParseJson(text), ch); });
}

std::string SerializePublicMaterial(const PublicMaterial& pub) {
  Json j = Json::object();
  Json f0 = Json::array();
  for (const auto& row : pub.pk.f0) f0.push_back(PolyVecJson(row));
  j["f0"] = std::move(f0);
  j["fprime"] = PolyVecJson(pub.pk.fprime);
  Json sigma = Json::array();
  for (int s : pub.rep.sigma()) sigma.push_back(s);
  j["sigma"] = std::move(sigma);
  const std::size_t n = pub.lambda.n();
  Json lam = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json plane = Json::array();
    for (std::size_t jj = 0; jj < n; ++jj) {
      Json line = Json::array();
      for (std::size_t k = 0; k < n; ++k) line.push_back(Dec(pub.lambda.at(i, jj, k)));
      plane.push_back(std::move(line));
    }
    lam.push_back(std::move(plane));
  }
  j["lambda"] = std::move(lam);
  Json refresher = Json::object();
  Json kappa = Json::array();
  for (std::uint64_t k : pub.refresher.kappa) kappa.push_back(k);
  refresher["kappa"] = std::move(kappa);
  Json rho = Json::array();
  for (const Ciphertext& ct : pub.refresher.rho) rho.push_back(CiphertextJson(ct));
  refresher["rho"] = std::move(rho);
  j["refresher"] = std::move(refresher);
  j["locator_db"] = LocatorDbJson(pub.db);
  return j.dump() + "\n";
}

absl::StatusOr<PublicMaterial> ParsePublicMaterial(std::string_view text,
                                                   const Channel& ch) {
  auto parsed = Guarded([&]() -> absl::StatusOr<PublicMaterial> {
    Json j = ParseJson(text);
    PublicMaterial pub;
    for (const Json& row : Array(Field(j, "f0"), "f0")) {
      std::vector<RingPoly> r;
      for (const Json& e : Array(row, "f0")) r.push_back(ParsePolyIn(e, "f0", ch));
      if (r.size() != ch.n()) throw FormatError{"f0: row length differs from n"};
      pub.pk.f0.push_back(std::move(r));
    }
    for (const Json& e : Array(Field(j, "fprime"), "fprime")) {
      pub.pk.fprime.push_back(ParsePolyIn(e, "fprime", ch));
    }
    if (pub.pk.f0.size() != ch.N() || pub.pk.fprime.size() != ch.N()) {
      throw FormatError{"public key: row count differs from N"};
    }
    std::vector<int> sigma;
    for (const Json& s : Array(Field(j, "sigma"), "sigma")) {
      sigma.push_back(static_cast<int>(I64(s, "sigma")));
    }
    if (sigma.size() != ch.n()) throw FormatError{"sigma: length differs from n"};
    auto rep = Repartition::Create(ch.q(), std::move(sigma));
    if (!rep.ok()) return rep.status();
    pub.rep = *std::move(rep);
    const std::size_t n = ch.n();
    pub.lambda = LambdaTensor(n);
    const Json& lam = Array(Field(j, "lambda"), "lambda");
    if (lam.size() != n) throw FormatError{"lambda: wrong shape"};
    for (std::size_t i = 0; i < n; ++i) {
      if (Array(lam[i], "lambda").size() != n) throw FormatError{"lambda: wrong shape"};
      for (std::size_t jj = 0; jj < n; ++jj) {
        if (Array(lam[i][jj], "lambda").size() != n) {
          throw FormatError{"lambda: wrong shape"};
        }
        for (std::size_t k = 0; k < n; ++k) {
          std::uint64_t v = U64(lam[i][jj][k], "lambda");
          if (v >= ch.q()) throw FormatError{"lambda: entry not below q"};
          pub.lambda.at(i, jj, k) = v;
        }
      }
    }
    const Json& refresher = Field(j, "refresher");
    pub.refresher.kappa = ParseU64Array(Field(refresher, "kappa"), "kappa");
    for (const Json& e : Array(Field(refresher, "rho"), "rho")) {
      pub.refresher.rho.push_back(CiphertextFrom(e));
    }
    if (j.contains("locator_db")) {
      pub.db = LocatorDbFrom(j.at("locator_db"), ch);
    }
    return pub;
  });
  if (!parsed.ok()) return parsed.status();
  return *std::move(parsed);
}

absl::StatusOr<std::string> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

absl::Status WriteFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return absl::PermissionDeniedError(absl::StrCat("cannot write ", path));
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) return absl::DataLossError(absl::StrCat("short write to ", path));
  return absl::OkStatus();
}

}  // namespace aces
