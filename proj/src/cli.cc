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

#include "aces/cli.h"

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "aces/channel.h"
#include "aces/cipher.h"
#include "aces/circuit.h"
#include "aces/keygen.h"
#include "aces/refresh.h"
#include "aces/serialization.h"

namespace aces {
namespace {

// Cryptographic guard failures exit with 2; everything else is a usage error.
int Report(const absl::Status& s, std::ostream& err) {
  err << "aces: " << s.message() << "\n";
  return s.code() == absl::StatusCode::kFailedPrecondition ? kExitGuard
                                                           : kExitUsage;
}

absl::StatusOr<Channel> LoadChannel(const std::string& path) {
  auto text = ReadFile(path);
  if (!text.ok()) return text.status();
  auto params = ParseChannel(*text);
  if (!params.ok()) return params.status();
  return Channel::Create(*std::move(params));
}

absl::StatusOr<PublicMaterial> LoadPublic(const std::string& path,
                                          const Channel& ch) {
  auto text = ReadFile(path);
  if (!text.ok()) return text.status();
  return ParsePublicMaterial(*text, ch);
}

absl::StatusOr<Ciphertext> LoadCiphertext(const std::string& path) {
  auto text = ReadFile(path);
  if (!text.ok()) return text.status();
  return ParseCiphertext(*text);
}

absl::StatusOr<std::vector<std::int64_t>> ParseU(const std::string& text) {
  std::vector<std::int64_t> u;
  for (absl::string_view part :
       absl::StrSplit(text, absl::ByAnyChar(", "), absl::SkipEmpty())) {
    std::int64_t v = 0;
    if (!absl::SimpleAtoi(part, &v)) {
      return absl::InvalidArgumentError(
          absl::StrCat("--u: not an integer: ", std::string(part)));
    }
    u.push_back(v);
  }
  return u;
}

absl::Status EnsureDir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    return absl::PermissionDeniedError(
        absl::StrCat("cannot create ", dir, ": ", ec.message()));
  }
  return absl::OkStatus();
}

std::string Join(const std::string& dir, const std::string& file) {
  return (std::filesystem::path(dir) / file).string();
}

struct KeygenArgs {
  std::uint64_t p = 2, q = 15015, omega = 1, k0 = 1;
  std::size_t degree = 4, n = 3, big_n = 2;
  std::string u, seed, out;
};

int Keygen(const KeygenArgs& a, std::ostream& out, std::ostream& err) {
  ArithmeticChannel params;
  params.p = a.p;
  params.q = a.q;
  params.omega = a.omega;
  params.n = a.n;
  params.N = a.big_n;
  params.k0 = a.k0;
  if (a.u.empty()) {
    params.u = MonomialMinusOne(a.degree);
  } else {
    auto u = ParseU(a.u);
    if (!u.ok()) return Report(u.status(), err);
    params.u = *std::move(u);
  }
  auto ch = Channel::Create(params);
  if (!ch.ok()) return Report(ch.status(), err);
  auto rng = RandomSource::FromHex(a.seed);
  if (!rng.ok()) return Report(rng.status(), err);
  auto bundle = KeyGen(*ch, *rng);
  if (!bundle.ok()) return Report(bundle.status(), err);
  auto db = BuildLocatorDb(*ch, bundle->sk, *rng);
  if (!db.ok()) return Report(db.status(), err);
  PublicMaterial pub{bundle->rep, bundle->pk, bundle->lambda,
                     bundle->refresher, *std::move(db)};
  if (absl::Status s = EnsureDir(a.out); !s.ok()) return Report(s, err);
  for (auto [file, contents] :
       {std::pair{"channel.json", SerializeChannel(params)},
        std::pair{"public.json", SerializePublicMaterial(pub)},
        std::pair{"secret.json", SerializeSecretKey(bundle->sk)}}) {
    if (absl::Status s = WriteFile(Join(a.out, file), contents); !s.ok()) {
      return Report(s, err);
    }
  }
  out << "wrote channel.json public.json secret.json to " << a.out << "\n";
  return kExitOk;
}

struct EncryptArgs {
  std::string pub, channel, seed, out;
  std::int64_t message = 0;
};

int EncryptCmd(const EncryptArgs& a, std::ostream& err) {
  auto ch = LoadChannel(a.channel);
  if (!ch.ok()) return Report(ch.status(), err);
  auto pub = LoadPublic(a.pub, *ch);
  if (!pub.ok()) return Report(pub.status(), err);
  if (a.message < 0 || static_cast<std::uint64_t>(a.message) >= ch->p()) {
    return Report(absl::InvalidArgumentError(absl::StrCat(
                      "--message must lie in [0, ", ch->p(), ")")),
                  err);
  }
  auto rng = RandomSource::FromHex(a.seed);
  if (!rng.ok()) return Report(rng.status(), err);
  auto ct = Encrypt(*ch, pub->rep, pub->pk,
                    Residue{static_cast<std::uint64_t>(a.message), ch->p()},
                    *rng);
  if (!ct.ok()) return Report(ct.status(), err);
  if (absl::Status s = WriteFile(a.out, SerializeCiphertext(*ct)); !s.ok()) {
    return Report(s, err);
  }
  return kExitOk;
}

struct DecryptArgs {
  std::string secret, channel, ct;
};

int DecryptCmd(const DecryptArgs& a, std::ostream& out, std::ostream& err) {
  auto ch = LoadChannel(a.channel);
  if (!ch.ok()) return Report(ch.status(), err);
  auto text = ReadFile(a.secret);
  if (!text.ok()) return Report(text.status(), err);
  auto sk = ParseSecretKey(*text, *ch);
  if (!sk.ok()) return Report(sk.status(), err);
  auto ct = LoadCiphertext(a.ct);
  if (!ct.ok()) return Report(ct.status(), err);
  auto m = Decrypt(*ch, *sk, *ct);
  if (!m.ok()) return Report(m.status(), err);
  out << m->value << "\n";
  return kExitOk;
}

struct EvalArgs {
  std::string pub, channel, circuit, refresh = "auto", out, seed = "00";
  std::vector<std::string> inputs;
  bool lambda_in_pub = false;
};

int EvalCmd(const EvalArgs& a, std::ostream& out, std::ostream& err) {
  auto ch = LoadChannel(a.channel);
  if (!ch.ok()) return Report(ch.status(), err);
  auto pub = LoadPublic(a.pub, *ch);
  if (!pub.ok()) return Report(pub.status(), err);
  auto text = ReadFile(a.circuit);
  if (!text.ok()) return Report(text.status(), err);
  auto circuit = ParseCircuit(*text);
  if (!circuit.ok()) return Report(circuit.status(), err);
  auto policy = ParseRefreshPolicy(a.refresh);
  if (!policy.ok()) return Report(policy.status(), err);
  auto rng = RandomSource::FromHex(a.seed);
  if (!rng.ok()) return Report(rng.status(), err);
  std::map<std::string, Ciphertext> env;
  for (const std::string& binding : a.inputs) {
    std::size_t eq = binding.find('=');
    if (eq == std::string::npos || eq == 0) {
      return Report(absl::InvalidArgumentError(absl::StrCat(
                        "--input expects NAME=FILE, got ", binding)),
                    err);
    }
    auto ct = LoadCiphertext(binding.substr(eq + 1));
    if (!ct.ok()) return Report(ct.status(), err);
    env[binding.substr(0, eq)] = *std::move(ct);
  }
  EvalResult result = Evaluate(*circuit, env, *ch, *pub, *policy, *rng);
  if (absl::Status s = EnsureDir(a.out); !s.ok()) return Report(s, err);
  if (absl::Status s = WriteFile(Join(a.out, "report.json"),
                                 SerializeReport(result.report, result.status));
      !s.ok()) {
    return Report(s, err);
  }
  if (!result.status.ok()) return Report(result.status, err);
  for (const auto& [name, ct] : result.outputs) {
    if (absl::Status s =
            WriteFile(Join(a.out, name + ".json"), SerializeCiphertext(ct));
        !s.ok()) {
      return Report(s, err);
    }
    out << name << " level " << ct.level << "\n";
  }
  for (const RefreshEvent& e : result.report.refreshes) {
    out << "refreshed " << e.wire << " " << e.pre_level << " -> "
        << e.post_level << "\n";
  }
  return kExitOk;
}

struct RefreshArgs {
  std::string pub, channel, ct, out, seed = "00";
};

int RefreshCmd(const RefreshArgs& a, std::ostream& out, std::ostream& err) {
  auto ch = LoadChannel(a.channel);
  if (!ch.ok()) return Report(ch.status(), err);
  auto pub = LoadPublic(a.pub, *ch);
  if (!pub.ok()) return Report(pub.status(), err);
  auto ct = LoadCiphertext(a.ct);
  if (!ct.ok()) return Report(ct.status(), err);
  if (absl::Status s = CheckCiphertextShape(*ch, *ct); !s.ok()) {
    return Report(s, err);
  }
  auto rng = RandomSource::FromHex(a.seed);
  if (!rng.ok()) return Report(rng.status(), err);
  LocatorIndex index(*ch, pub->db);
  auto refreshed = RefreshWithRetry(*ch, *pub, index, *ct, *rng);
  if (!refreshed.ok()) return Report(refreshed.status(), err);
  if (absl::Status s = WriteFile(a.out, SerializeCiphertext(refreshed->ct));
      !s.ok()) {
    return Report(s, err);
  }
  out << "level " << ct->level << " -> " << refreshed->ct.level << " after "
      << refreshed->rerandomizations << " rerandomizations\n";
  return kExitOk;
}

struct InspectArgs {
  std::string ct, channel, pub;
};

int InspectCmd(const InspectArgs& a, std::ostream& out, std::ostream& err) {
  auto ct = LoadCiphertext(a.ct);
  if (!ct.ok()) return Report(ct.status(), err);
  out << "level " << ct->level << "\n";
  out << "components " << ct->c.size() << "\n";
  if (a.channel.empty()) return kExitOk;
  auto ch = LoadChannel(a.channel);
  if (!ch.ok()) return Report(ch.status(), err);
  if (absl::Status s = CheckCiphertextShape(*ch, *ct); !s.ok()) {
    return Report(s, err);
  }
  out << "decryptable " << (IsDecryptable(*ch, ct->level) ? "yes" : "no")
      << " (max level " << MaxDecryptableLevel(*ch) << ")\n";
  std::optional<PublicMaterial> pub;
  if (!a.pub.empty()) {
    auto loaded = LoadPublic(a.pub, *ch);
    if (!loaded.ok()) return Report(loaded.status(), err);
    pub = *std::move(loaded);
  }
  for (std::size_t i = 0; i < ct->c.size(); ++i) {
    std::uint64_t image = ch->Eval(ct->c[i]);
    out << "c[" << i << "] image " << image;
    if (pub.has_value()) {
      std::uint64_t prime = pub->rep.PrimeFor(i);
      out << " q_sigma " << prime << " divisible "
          << (image % prime == 0 ? "yes" : "no");
    }
    out << "\n";
  }
  if (pub.has_value()) {
    LocatorIndex index(*ch, pub->db);
    bool ok = PubliclyRefreshable(index, *ch, *ct, ch->n());
    out << "publicly refreshable " << (ok ? "yes" : "unknown") << "\n";
  }
  return kExitOk;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"ACES homomorphic encryption toolkit", "aces"};
  app.require_subcommand(1);

  KeygenArgs kg;
  CLI::App* keygen = app.add_subcommand("keygen", "Generate key material");
  keygen->add_option("--p", kg.p, "Plaintext modulus")->capture_default_str();
  keygen->add_option("--q", kg.q, "Ciphertext modulus")->capture_default_str();
  keygen->add_option("--degree", kg.degree, "Degree d of u = X^d - 1")
      ->capture_default_str();
  keygen->add_option("--n", kg.n, "Secret key dimension")->capture_default_str();
  keygen->add_option("--bigN", kg.big_n, "Public key rows")->capture_default_str();
  keygen->add_option("--k0", kg.k0, "Security slack")->capture_default_str();
  keygen->add_option("--omega", kg.omega, "Evaluation point")
      ->capture_default_str();
  keygen->add_option("--u", kg.u,
                     "Coefficients of u, low to high, comma separated");
  keygen->add_option("--seed", kg.seed, "Hex seed")->required();
  keygen->add_option("--out", kg.out, "Output directory")->required();

  EncryptArgs enc;
  CLI::App* encrypt = app.add_subcommand("encrypt", "Encrypt a message in Z_p");
  encrypt->add_option("--pub", enc.pub)->required();
  encrypt->add_option("--channel", enc.channel)->required();
  encrypt->add_option("--message", enc.message)->required();
  encrypt->add_option("--seed", enc.seed, "Hex seed")->required();
  encrypt->add_option("--out", enc.out)->required();

  DecryptArgs dec;
  CLI::App* decrypt = app.add_subcommand("decrypt", "Decrypt a ciphertext");
  decrypt->add_option("--secret", dec.secret)->required();
  decrypt->add_option("--channel", dec.channel)->required();
  decrypt->add_option("--ct", dec.ct)->required();

  EvalArgs ev;
  CLI::App* eval = app.add_subcommand("eval", "Evaluate a circuit");
  eval->add_option("--pub", ev.pub)->required();
  eval->add_option("--channel", ev.channel)->required();
  eval->add_flag("--lambda-in-pub", ev.lambda_in_pub,
                 "Read the lambda tensor from the public file (always on)");
  eval->add_option("--circuit", ev.circuit)->required();
  eval->add_option("--input", ev.inputs, "NAME=FILE")->required();
  eval->add_option("--refresh", ev.refresh, "auto or off")
      ->capture_default_str();
  eval->add_option("--seed", ev.seed, "Hex seed")->capture_default_str();
  eval->add_option("--out", ev.out, "Output directory")->required();

  RefreshArgs rf;
  CLI::App* refresh = app.add_subcommand("refresh", "Refresh a ciphertext");
  refresh->add_option("--pub", rf.pub)->required();
  refresh->add_option("--channel", rf.channel)->required();
  refresh->add_option("--ct", rf.ct)->required();
  refresh->add_option("--out", rf.out)->required();
  refresh->add_option("--seed", rf.seed, "Hex seed")->capture_default_str();

  InspectArgs in;
  CLI::App* inspect = app.add_subcommand("inspect", "Describe a ciphertext");
  inspect->add_option("--ct", in.ct)->required();
  inspect->add_option("--channel", in.channel);
  inspect->add_option("--pub", in.pub)->needs(
      inspect->get_option("--channel"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (keygen->parsed()) return Keygen(kg, out, err);
  if (encrypt->parsed()) return EncryptCmd(enc, err);
  if (decrypt->parsed()) return DecryptCmd(dec, out, err);
  if (eval->parsed()) return EvalCmd(ev, out, err);
  if (refresh->parsed()) return RefreshCmd(rf, out, err);
  if (inspect->parsed()) return InspectCmd(in, out, err);
  return kExitUsage;
}

}  // namespace aces
