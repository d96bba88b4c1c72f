// Copyright 2026 The CBAN Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace cban::crypto {

// Ed25519 key pair. The private half is the 32-byte seed and never
// appears in any metadata document; the public half is what root
// metadata distributes.
struct KeyPair {
  std::string public_key;   // 64 hex chars
  std::string private_key;  // 64 hex chars (seed)
};

// Deterministic when a 32-byte seed is supplied (test fixtures),
// cryptographically random otherwise. Throws Errc::bad_seed_length.
KeyPair generate_keypair(std::optional<std::string_view> seed = std::nullopt);

// Detached Ed25519 signature, 128 hex chars, deterministic for a fixed
// key and message. Throws Errc::malformed_key on a bad private key.
std::string sign(const std::string& private_key_hex, std::string_view message);

// Malformed inputs are a false verdict, never an exception.
bool verify(const std::string& public_key_hex, std::string_view message,
            const std::string& signature_hex) noexcept;

// First 16 hex chars of SHA-256 over the raw public key bytes. Stable
// across processes and platforms.
std::string key_id(const std::string& public_key_hex);

// Single-line hex key files. Private key files are created with 0600.
void write_key_file(const std::filesystem::path& path, const std::string& key_hex,
                    bool restrict_permissions);
std::string read_key_file(const std::filesystem::path& path);

}  // namespace cban::crypto
