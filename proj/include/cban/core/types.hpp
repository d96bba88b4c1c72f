// Copyright 2026 The CBAN Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cban/core/errors.hpp"
#include "cban/core/version.hpp"

namespace cban {

// Package identity is the (namespace, name) pair; the same name may
// exist under different namespaces without conflict.
struct PackageCoord {
  std::string ns;
  std::string name;

  auto operator<=>(const PackageCoord&) const = default;

  std::string str() const { return ns + "/" + name; }
  static PackageCoord parse(std::string_view text);  // "ns/name", throws Errc::bad_coord
};

// ^[a-z0-9][a-z0-9_-]{0,63}$ — shared by namespaces, names, author ids.
bool is_valid_identifier(std::string_view s);

struct Dependency {
  PackageCoord coord;
  VersionReq req;

  auto operator<=>(const Dependency&) const = default;
};

struct PackageManifest {
  PackageCoord coord;
  Version version;
  std::vector<Dependency> dependencies;
  std::string license;
  std::string author_id;
  std::string description;
  std::optional<std::string> test_command;
  std::string payload_hash;

  nlohmann::json to_json() const;
  static PackageManifest from_json(const nlohmann::json& j);  // throws Errc::malformed_document
};

// Author-signed manifest. The signature covers canonical_encode of the
// inner manifest object, under the author key registered in root
// metadata. These bytes ride inside the archive as manifest.json and
// are served standalone at /meta/...
struct SignedManifest {
  PackageManifest manifest;
  std::string signature;  // 128 hex chars

  nlohmann::json to_json() const;
  std::string encode() const;  // canonical bytes; hash of this is manifest_hash
  static SignedManifest from_json(const nlohmann::json& j);
  static SignedManifest decode(std::string_view bytes);
};

struct PackageEntry {
  PackageCoord coord;
  Version version;
  std::string archive_hash;  // SHA-256 of the .tar.gz bytes
  std::uint64_t archive_size = 0;
  std::string manifest_hash;  // SHA-256 of SignedManifest::encode()

  nlohmann::json to_json() const;
  static PackageEntry from_json(const nlohmann::json& j);
};

// The repository-wide signed document: every package with its secure
// hashes, the author key map, a monotone version counter, and an
// expiration timestamp. Clients and mirrors trust nothing a root
// document does not vouch for.
struct RootMetadata {
  std::int64_t format_version = 1;
  std::int64_t root_version = 0;
  std::int64_t generated_at = 0;
  std::int64_t expires_at = 0;
  std::map<std::string, std::string> authors;  // author_id -> hex public key
  std::vector<PackageEntry> entries;           // sorted by (ns, name, version)
  std::string signature;                       // over signing_bytes()

  nlohmann::json to_json(bool include_signature = true) const;
  std::string signing_bytes() const;  // canonical bytes with signature removed
  std::string encode() const;         // canonical bytes of the full document
  static RootMetadata from_json(const nlohmann::json& j);
  static RootMetadata decode(std::string_view bytes);

  const PackageEntry* find(const PackageCoord& coord, const Version& v) const;
  std::vector<Version> versions_of(const PackageCoord& coord) const;
};

struct Violation {
  Errc code;
  std::string message;
};

// Both validators report the complete violation list instead of stopping
// at the first, so a registry rejection names everything wrong at once.
std::vector<Violation> validate_manifest(const PackageManifest& m,
                                         const std::set<std::string>& license_allowlist);
std::vector<Violation> validate_root(const RootMetadata& r);

std::string describe(const std::vector<Violation>& violations);

}  // namespace cban
