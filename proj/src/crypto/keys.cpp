// Copyright 2026 The CBAN Authors
// SPDX-License-Identifier: Apache-2.0
#include "cban/crypto/keys.hpp"

#include <sys/stat.h>

#include <fstream>

#include <sodium.h>

#include "cban/core/errors.hpp"
#include "cban/core/hash.hpp"
#include "cban/core/hex.hpp"

namespace cban::crypto {

namespace {

void ensure_sodium() {
  if (sodium_init() < 0) {
    throw Error(Errc::io_error, "libsodium initialization failed");
  }
}

}  // namespace

KeyPair generate_keypair(std::optional<std::string_view> seed) {
  ensure_sodium();
  unsigned char pk[crypto_sign_PUBLICKEYBYTES];
  unsigned char sk[crypto_sign_SECRETKEYBYTES];
  if (seed) {
    if (seed->size() != crypto_sign_SEEDBYTES) {
      throw Error(Errc::bad_seed_length,
                  "seed must be 32 bytes, got " + std::to_string(seed->size()));
    }
    crypto_sign_seed_keypair(pk, sk, reinterpret_cast<const unsigned char*>(seed->data()));
  } else {
    crypto_sign_keypair(pk, sk);
  }
  KeyPair kp;
  kp.public_key = to_hex(pk, sizeof(pk));
  // libsodium's secret key is seed || public key; only the seed is kept.
  kp.private_key = to_hex(sk, crypto_sign_SEEDBYTES);
  sodium_memzero(sk, sizeof(sk));
  return kp;
}

std::string sign(const std::string& private_key_hex, std::string_view message) {
  ensure_sodium();
  auto seed = from_hex(private_key_hex);
  if (!seed || seed->size() != crypto_sign_SEEDBYTES) {
    throw Error(Errc::malformed_key, "private key must be 64 hex chars");
  }
  unsigned char pk[crypto_sign_PUBLICKEYBYTES];
  unsigned char sk[crypto_sign_SECRETKEYBYTES];
  crypto_sign_seed_keypair(pk, sk, seed->data());
  unsigned char sig[crypto_sign_BYTES];
  crypto_sign_detached(sig, nullptr, reinterpret_cast<const unsigned char*>(message.data()),
                       message.size(), sk);
  sodium_memzero(sk, sizeof(sk));
  return to_hex(sig, sizeof(sig));
}

bool verify(const std::string& public_key_hex, std::string_view message,
            const std::string& signature_hex) noexcept {
  if (sodium_init() < 0) return false;
  auto pk = from_hex(public_key_hex);
  auto sig = from_hex(signature_hex);
  if (!pk || pk->size() != crypto_sign_PUBLICKEYBYTES) return false;
  if (!sig || sig->size() != crypto_sign_BYTES) return false;
  return crypto_sign_verify_detached(sig->data(),
                                     reinterpret_cast<const unsigned char*>(message.data()),
                                     message.size(), pk->data()) == 0;
}

std::string key_id(const std::string& public_key_hex) {
  auto pk = from_hex(public_key_hex);
  if (!pk || pk->size() != crypto_sign_PUBLICKEYBYTES) {
    throw Error(Errc::malformed_key, "public key must be 64 hex chars");
  }
  std::string raw(reinterpret_cast<const char*>(pk->data()), pk->size());
  return hash_bytes(raw).substr(0, 16);
}

void write_key_file(const std::filesystem::path& path, const std::string& key_hex,
                    bool restrict_permissions) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(Errc::io_error, "cannot write key file " + path.string());
  }
  out << key_hex << "\n";
  out.close();
  if (restrict_permissions) {
    ::chmod(path.c_str(), 0600);
  }
}

std::string read_key_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(Errc::io_error, "cannot read key file " + path.string());
  }
  std::string line;
  std::getline(in, line);
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n' ||
                           line.back() == ' ')) {
    line.pop_back();
  }
  if (!is_lower_hex(line)) {
    throw Error(Errc::malformed_key, "key file " + path.string() + " is not hex");
  }
  return line;
}

}  // namespace cban::crypto
