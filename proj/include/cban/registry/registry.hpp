// Copyright 2026 The CBAN Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <set>
#include <shared_mutex>
#include <string>
#include <vector>

#include "cban/core/types.hpp"
#include "cban/crypto/keys.hpp"

namespace cban::registry {

using Clock = std::function<std::int64_t()>;
std::int64_t system_clock_seconds();

struct Config {
  std::filesystem::path data_dir;
  std::filesystem::path root_key_path;
  std::string admin_id = "admin";
  std::int64_t root_ttl = 86400;
  std::set<std::string> license_allowlist = {"MIT", "Apache-2.0", "BSD-3-Clause",
                                             "GPL-3.0-only"};
  std::uint64_t max_archive_bytes = 16ull << 20;
  Clock clock = system_clock_seconds;
};

struct OwnershipRecord {
  PackageCoord coord;
  std::string owner_id;
  std::int64_t created_at = 0;
};

// Append-only, per-package. Key registrations land in a registry-wide
// log under the reserved "_authors" name.
struct AuditEvent {
  std::int64_t seq = 0;
  std::int64_t timestamp = 0;
  std::string actor;
  std::string action;  // publish | transfer | key-register
  std::map<std::string, std::string> details;

  nlohmann::json to_json() const;
  static AuditEvent from_json(const nlohmann::json& j);
};

// The master server's state machine. All mutating operations are
// serialized behind one writer lock and end by regenerating signed root
// metadata; reads run concurrently against the last published snapshot.
//
// Store layout under data_dir:
//   root.json                      current signed root metadata
//   owners.json                    coord -> ownership record
//   pkg/<ns>/<name>/<ver>.tar.gz   archives, exact published bytes
//   meta/<ns>/<name>/<ver>.json    signed manifests, canonical bytes
//   audit/<ns>/<name>.json         per-package audit log
//   audit/_authors.json            author registration log
class Registry {
 public:
  explicit Registry(Config config);

  // Creates an empty store: fresh root key pair (root.key/root.pub) and
  // a signed, empty root.json at root_version 1.
  static void init(const std::filesystem::path& data_dir, std::int64_t root_ttl = 86400);

  PackageEntry publish(std::string_view archive_bytes, const std::string& submitted_by);
  OwnershipRecord transfer_ownership(const PackageCoord& coord, const std::string& new_owner,
                                     const std::string& authorizer);
  std::map<std::string, std::string> register_author(const std::string& author_id,
                                                     const std::string& public_key_hex,
                                                     const std::string& authorizer);
  RootMetadata regenerate_root();

  std::vector<AuditEvent> audit_log(const PackageCoord& coord) const;
  std::vector<PackageEntry> search(std::string_view query) const;

  // Store/metadata consistency walk; returns human-readable problems,
  // empty when the store is healthy.
  std::vector<std::string> fsck() const;

  RootMetadata root() const;
  std::string root_bytes() const;
  std::string root_public_key() const;
  const Config& config() const { return config_; }
  std::filesystem::path manifest_path(const PackageCoord& coord, const Version& v) const;
  std::filesystem::path archive_path(const PackageCoord& coord, const Version& v) const;

 private:
  RootMetadata regenerate_locked();
  void append_audit(const std::filesystem::path& file, const std::string& actor,
                    const std::string& action,
                    const std::map<std::string, std::string>& details);
  std::vector<AuditEvent> read_audit(const std::filesystem::path& file) const;
  std::filesystem::path audit_path(const PackageCoord& coord) const;
  void save_owners_locked();

  Config config_;
  crypto::KeyPair root_key_;
  mutable std::shared_mutex mu_;
  RootMetadata root_;
  std::string root_bytes_;
  std::map<std::string, std::string> authors_;
  std::map<PackageCoord, OwnershipRecord> owners_;
};

}  // namespace cban::registry
