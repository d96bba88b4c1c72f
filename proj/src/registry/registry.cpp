// Copyright 2026 The CBAN Authors
// SPDX-License-Identifier: Apache-2.0
#include "cban/registry/registry.hpp"

#include <algorithm>
#include <chrono>

#include "cban/core/archive.hpp"
#include "cban/core/canonical_json.hpp"
#include "cban/core/fsutil.hpp"
#include "cban/core/hash.hpp"
#include "cban/core/hex.hpp"
#include "cban/core/search.hpp"

namespace cban::registry {

namespace fs = std::filesystem;
using nlohmann::json;

std::int64_t system_clock_seconds() {
  return std::chrono::duration_cast<std::chrono::seconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

json AuditEvent::to_json() const {
  json d = json::object();
  for (const auto& [k, v] : details) d[k] = v;
  return {{"action", action}, {"actor", actor},           {"details", d},
          {"seq", seq},       {"timestamp", timestamp}};
}

AuditEvent AuditEvent::from_json(const json& j) {
  AuditEvent e;
  e.action = j.at("action").get<std::string>();
  e.actor = j.at("actor").get<std::string>();
  e.seq = j.at("seq").get<std::int64_t>();
  e.timestamp = j.at("timestamp").get<std::int64_t>();
  for (auto it = j.at("details").begin(); it != j.at("details").end(); ++it) {
    e.details[it.key()] = it.value().get<std::string>();
  }
  return e;
}

void Registry::init(const fs::path& data_dir, std::int64_t root_ttl) {
  if (fs::exists(data_dir / "root.json")) {
    throw Error(Errc::usage_error, "store already initialized: " + data_dir.string());
  }
  fs::create_directories(data_dir / "pkg");
  fs::create_directories(data_dir / "meta");
  fs::create_directories(data_dir / "audit");

  crypto::KeyPair key = crypto::generate_keypair();
  crypto::write_key_file(data_dir / "root.key", key.private_key, /*restrict=*/true);
  crypto::write_key_file(data_dir / "root.pub", key.public_key, /*restrict=*/false);
  write_file_atomic(data_dir / "owners.json", "{}");

  RootMetadata root;
  root.root_version = 1;
  root.generated_at = system_clock_seconds();
  root.expires_at = root.generated_at + root_ttl;
  root.signature = crypto::sign(key.private_key, root.signing_bytes());
  write_file_atomic(data_dir / "root.json", root.encode());
}

Registry::Registry(Config config) : config_(std::move(config)) {
  std::string seed_hex = crypto::read_key_file(config_.root_key_path);
  auto seed = from_hex(seed_hex);
  if (!seed || seed->size() != 32) {
    throw Error(Errc::malformed_key,
                "root key file must hold a 64-hex-char seed: " +
                    config_.root_key_path.string());
  }
  root_key_ = crypto::generate_keypair(
      std::string_view(reinterpret_cast<const char*>(seed->data()), seed->size()));

  auto root_file = read_file_if_exists(config_.data_dir / "root.json");
  if (!root_file) {
    throw Error(Errc::usage_error,
                "no root.json in " + config_.data_dir.string() + " (run init first)");
  }
  root_ = RootMetadata::decode(*root_file);
  root_bytes_ = *root_file;
  authors_ = root_.authors;

  auto owners_file = read_file_if_exists(config_.data_dir / "owners.json");
  if (owners_file) {
    json j = json::parse(*owners_file);
    for (auto it = j.begin(); it != j.end(); ++it) {
      OwnershipRecord rec;
      rec.coord = PackageCoord::parse(it.key());
      rec.owner_id = it.value().at("owner_id").get<std::string>();
      rec.created_at = it.value().at("created_at").get<std::int64_t>();
      owners_[rec.coord] = rec;
    }
  }
}

fs::path Registry::manifest_path(const PackageCoord& coord, const Version& v) const {
  return config_.data_dir / "meta" / coord.ns / coord.name / (v.str() + ".json");
}

fs::path Registry::archive_path(const PackageCoord& coord, const Version& v) const {
  return config_.data_dir / "pkg" / coord.ns / coord.name / (v.str() + ".tar.gz");
}

fs::path Registry::audit_path(const PackageCoord& coord) const {
  return config_.data_dir / "audit" / coord.ns / (coord.name + ".json");
}

std::vector<AuditEvent> Registry::read_audit(const fs::path& file) const {
  auto bytes = read_file_if_exists(file);
  if (!bytes) return {};
  std::vector<AuditEvent> events;
  for (const auto& e : json::parse(*bytes)) events.push_back(AuditEvent::from_json(e));
  return events;
}

void Registry::append_audit(const fs::path& file, const std::string& actor,
                            const std::string& action,
                            const std::map<std::string, std::string>& details) {
  std::vector<AuditEvent> events = read_audit(file);
  AuditEvent e;
  e.seq = events.empty() ? 1 : events.back().seq + 1;
  e.timestamp = config_.clock();
  e.actor = actor;
  e.action = action;
  e.details = details;
  events.push_back(e);
  json arr = json::array();
  for (const AuditEvent& ev : events) arr.push_back(ev.to_json());
  write_file_atomic(file, canonical_encode(arr));
}

void Registry::save_owners_locked() {
  json j = json::object();
  for (const auto& [coord, rec] : owners_) {
    j[coord.str()] = {{"created_at", rec.created_at}, {"owner_id", rec.owner_id}};
  }
  write_file_atomic(config_.data_dir / "owners.json", canonical_encode(j));
}

RootMetadata Registry::regenerate_locked() {
  // Entries are rebuilt from the manifest files on disk, not from the
  // in-memory list, so the signed document always reflects the store.
  std::vector<PackageEntry> entries;
  fs::path meta_root = config_.data_dir / "meta";
  if (fs::exists(meta_root)) {
    for (const auto& ns_dir : fs::directory_iterator(meta_root)) {
      if (!ns_dir.is_directory()) continue;
      for (const auto& name_dir : fs::directory_iterator(ns_dir)) {
        if (!name_dir.is_directory()) continue;
        for (const auto& file : fs::directory_iterator(name_dir)) {
          if (!file.is_regular_file() || file.path().extension() != ".json") continue;
          std::string manifest_bytes = read_file(file.path());
          SignedManifest sm;
          try {
            sm = SignedManifest::decode(manifest_bytes);
          } catch (const Error& e) {
            throw Error(Errc::store_corrupt,
                        "unreadable manifest " + file.path().string() + ": " + e.detail());
          }
          const PackageCoord& coord = sm.manifest.coord;
          const Version& version = sm.manifest.version;
          if (coord.ns != ns_dir.path().filename().string() ||
              coord.name != name_dir.path().filename().string() ||
              version.str() + ".json" != file.path().filename().string()) {
            throw Error(Errc::store_corrupt,
                        "manifest " + file.path().string() + " does not match its path");
          }
          auto archive_bytes = read_file_if_exists(archive_path(coord, version));
          if (!archive_bytes) {
            throw Error(Errc::store_corrupt,
                        "missing archive for " + coord.str() + "@" + version.str());
          }
          PackageEntry entry;
          entry.coord = coord;
          entry.version = version;
          entry.archive_hash = hash_bytes(*archive_bytes);
          entry.archive_size = archive_bytes->size();
          entry.manifest_hash = hash_bytes(manifest_bytes);
          entries.push_back(std::move(entry));
        }
      }
    }
  }
  std::sort(entries.begin(), entries.end(), [](const PackageEntry& a, const PackageEntry& b) {
    return std::tie(a.coord.ns, a.coord.name, a.version) <
           std::tie(b.coord.ns, b.coord.name, b.version);
  });

  // Published versions are immutable: anything already vouched for by
  // the previous root must re-hash identically.
  for (const PackageEntry& previous : root_.entries) {
    auto it = std::find_if(entries.begin(), entries.end(), [&](const PackageEntry& e) {
      return e.coord == previous.coord && e.version == previous.version;
    });
    if (it == entries.end()) {
      throw Error(Errc::store_corrupt,
                  "entry " + previous.coord.str() + "@" + previous.version.str() +
                      " vanished from the store");
    }
    if (it->archive_hash != previous.archive_hash ||
        it->archive_size != previous.archive_size ||
        it->manifest_hash != previous.manifest_hash) {
      throw Error(Errc::store_corrupt,
                  "store drift for " + previous.coord.str() + "@" + previous.version.str());
    }
  }

  RootMetadata next;
  next.root_version = root_.root_version + 1;
  next.generated_at = config_.clock();
  next.expires_at = next.generated_at + config_.root_ttl;
  next.authors = authors_;
  next.entries = std::move(entries);
  next.signature = crypto::sign(root_key_.private_key, next.signing_bytes());

  auto violations = validate_root(next);
  if (!violations.empty()) {
    throw Error(Errc::store_corrupt, "regenerated root invalid: " + describe(violations));
  }

  std::string bytes = next.encode();
  write_file_atomic(config_.data_dir / "root.json", bytes);
  root_ = next;
  root_bytes_ = std::move(bytes);
  return root_;
}

RootMetadata Registry::regenerate_root() {
  std::unique_lock lock(mu_);
  return regenerate_locked();
}

PackageEntry Registry::publish(std::string_view archive_bytes,
                               const std::string& submitted_by) {
  std::unique_lock lock(mu_);
  if (archive_bytes.size() > config_.max_archive_bytes) {
    throw Error(Errc::policy_violation,
                "archive exceeds size cap of " + std::to_string(config_.max_archive_bytes) +
                    " bytes");
  }

  std::vector<ArchiveMember> members;
  try {
    members = read_archive(archive_bytes);
  } catch (const Error& e) {
    throw Error(Errc::bad_archive, e.detail());
  }

  const ArchiveMember* manifest_member = nullptr;
  std::vector<std::pair<std::string, std::string>> payload;
  for (const ArchiveMember& m : members) {
    if (m.path == kManifestMemberName) {
      manifest_member = &m;
    } else {
      payload.emplace_back(m.path, m.data);
    }
  }
  if (manifest_member == nullptr) {
    throw Error(Errc::bad_archive, "archive has no manifest.json at its root");
  }

  SignedManifest sm;
  try {
    sm = SignedManifest::decode(manifest_member->data);
  } catch (const Error& e) {
    throw Error(Errc::bad_archive, "manifest.json: " + e.detail());
  }
  if (sm.encode() != manifest_member->data) {
    throw Error(Errc::bad_archive, "manifest.json is not in canonical form");
  }
  const PackageManifest& m = sm.manifest;

  auto author = authors_.find(m.author_id);
  if (author == authors_.end()) {
    throw Error(Errc::unknown_author, "author '" + m.author_id + "' is not registered");
  }
  if (submitted_by != m.author_id) {
    throw Error(Errc::policy_violation, "submitted by '" + submitted_by +
                                            "' but manifest author is '" + m.author_id + "'");
  }
  if (!crypto::verify(author->second, canonical_encode(m.to_json()), sm.signature)) {
    throw Error(Errc::bad_manifest_signature,
                "manifest signature does not verify under the key of '" + m.author_id + "'");
  }
  auto violations = validate_manifest(m, config_.license_allowlist);
  if (!violations.empty()) {
    throw Error(Errc::policy_violation, describe(violations));
  }
  if (hash_payload(payload) != m.payload_hash) {
    throw Error(Errc::payload_hash_mismatch,
                "payload tree does not match the signed payload_hash");
  }
  auto owner = owners_.find(m.coord);
  if (owner != owners_.end() && owner->second.owner_id != submitted_by) {
    throw Error(Errc::not_owner, "'" + m.coord.str() + "' is owned by '" +
                                     owner->second.owner_id + "'");
  }
  if (root_.find(m.coord, m.version) != nullptr) {
    throw Error(Errc::duplicate_version,
                m.coord.str() + "@" + m.version.str() + " is already published");
  }

  // All checks passed; now touch the store. Archive and manifest land
  // before the new root.json so a crash can only leave orphans, never a
  // root entry without its files.
  write_file_atomic(archive_path(m.coord, m.version), archive_bytes);
  write_file_atomic(manifest_path(m.coord, m.version), manifest_member->data);
  if (owner == owners_.end()) {
    owners_[m.coord] = {m.coord, submitted_by, config_.clock()};
    save_owners_locked();
  }
  append_audit(audit_path(m.coord), submitted_by, "publish",
               {{"version", m.version.str()}, {"archive_hash", hash_bytes(archive_bytes)}});
  regenerate_locked();

  const PackageEntry* entry = root_.find(m.coord, m.version);
  if (entry == nullptr) {
    throw Error(Errc::store_corrupt, "published entry missing after regeneration");
  }
  return *entry;
}

OwnershipRecord Registry::transfer_ownership(const PackageCoord& coord,
                                             const std::string& new_owner,
                                             const std::string& authorizer) {
  std::unique_lock lock(mu_);
  auto it = owners_.find(coord);
  if (it == owners_.end()) {
    throw Error(Errc::unknown_package, "no package '" + coord.str() + "'");
  }
  if (!authors_.contains(new_owner)) {
    throw Error(Errc::unknown_author, "new owner '" + new_owner + "' is not registered");
  }
  if (authorizer != it->second.owner_id && authorizer != config_.admin_id) {
    throw Error(Errc::not_authorized,
                "'" + authorizer + "' is neither the owner nor the admin");
  }
  std::string old_owner = it->second.owner_id;
  it->second.owner_id = new_owner;
  it->second.created_at = config_.clock();
  save_owners_locked();
  append_audit(audit_path(coord), authorizer, "transfer",
               {{"from", old_owner}, {"to", new_owner}});
  return it->second;
}

std::map<std::string, std::string> Registry::register_author(const std::string& author_id,
                                                             const std::string& public_key_hex,
                                                             const std::string& authorizer) {
  std::unique_lock lock(mu_);
  if (authorizer != config_.admin_id) {
    throw Error(Errc::not_authorized, "only '" + config_.admin_id + "' may register authors");
  }
  if (!is_valid_identifier(author_id)) {
    throw Error(Errc::policy_violation, "author id '" + author_id + "' is not a valid identifier");
  }
  if (authors_.contains(author_id)) {
    throw Error(Errc::duplicate_author, "author '" + author_id + "' already registered");
  }
  auto raw = from_hex(public_key_hex);
  if (public_key_hex.size() != 64 || !is_lower_hex(public_key_hex) || !raw ||
      raw->size() != 32) {
    throw Error(Errc::malformed_key, "public key must be 64 lowercase hex chars");
  }
  authors_[author_id] = public_key_hex;
  append_audit(config_.data_dir / "audit" / "_authors.json", authorizer, "key-register",
               {{"author", author_id}, {"public_key", public_key_hex}});
  regenerate_locked();
  return authors_;
}

std::vector<AuditEvent> Registry::audit_log(const PackageCoord& coord) const {
  std::shared_lock lock(mu_);
  if (!owners_.contains(coord)) {
    throw Error(Errc::unknown_package, "no package '" + coord.str() + "'");
  }
  return read_audit(audit_path(coord));
}

std::vector<PackageEntry> Registry::search(std::string_view query) const {
  std::shared_lock lock(mu_);
  return search_entries(
      root_.entries,
      [this](const PackageEntry& e) {
        auto bytes = read_file_if_exists(manifest_path(e.coord, e.version));
        if (!bytes) return std::string();
        try {
          return SignedManifest::decode(*bytes).manifest.description;
        } catch (const Error&) {
          return std::string();
        }
      },
      query);
}

std::vector<std::string> Registry::fsck() const {
  std::shared_lock lock(mu_);
  std::vector<std::string> problems;
  for (const PackageEntry& e : root_.entries) {
    std::string tag = e.coord.str() + "@" + e.version.str();
    auto archive = read_file_if_exists(archive_path(e.coord, e.version));
    if (!archive) {
      problems.push_back(tag + ": archive missing");
    } else {
      if (hash_bytes(*archive) != e.archive_hash) problems.push_back(tag + ": archive hash mismatch");
      if (archive->size() != e.archive_size) problems.push_back(tag + ": archive size mismatch");
    }
    auto manifest = read_file_if_exists(manifest_path(e.coord, e.version));
    if (!manifest) {
      problems.push_back(tag + ": manifest missing");
    } else if (hash_bytes(*manifest) != e.manifest_hash) {
      problems.push_back(tag + ": manifest hash mismatch");
    }
    if (!owners_.contains(e.coord)) problems.push_back(tag + ": no ownership record");
  }
  for (const auto& [id, key] : root_.authors) {
    if (key.size() != 64 || !is_lower_hex(key)) problems.push_back("author " + id + ": bad key");
  }
  return problems;
}

RootMetadata Registry::root() const {
  std::shared_lock lock(mu_);
  return root_;
}

std::string Registry::root_bytes() const {
  std::shared_lock lock(mu_);
  return root_bytes_;
}

std::string Registry::root_public_key() const { return root_key_.public_key; }

}  // namespace cban::registry
