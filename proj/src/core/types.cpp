// Copyright 2026 The CBAN Authors
// SPDX-License-Identifier: Apache-2.0
#include "cban/core/types.hpp"

#include <algorithm>

#include "cban/core/canonical_json.hpp"
#include "cban/core/hex.hpp"
#include "cban/core/hash.hpp"

namespace cban {

namespace {

using nlohmann::json;

// Strict object schema: every listed key present with the right type,
// nothing else. Documents with stray keys do not round-trip through
// canonical encoding, so they are rejected outright.
void require_keys(const json& j, const std::vector<std::string>& required,
                  const std::vector<std::string>& optional, std::string_view what) {
  if (!j.is_object()) {
    throw Error(Errc::malformed_document, std::string(what) + ": expected object");
  }
  for (const auto& key : required) {
    if (!j.contains(key)) {
      throw Error(Errc::malformed_document,
                  std::string(what) + ": missing key '" + key + "'");
    }
  }
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (std::find(required.begin(), required.end(), it.key()) == required.end() &&
        std::find(optional.begin(), optional.end(), it.key()) == optional.end()) {
      throw Error(Errc::malformed_document,
                  std::string(what) + ": unexpected key '" + it.key() + "'");
    }
  }
}

std::string get_string(const json& j, const char* key, std::string_view what) {
  const auto& v = j.at(key);
  if (!v.is_string()) {
    throw Error(Errc::malformed_document,
                std::string(what) + ": '" + key + "' must be a string");
  }
  return v.get<std::string>();
}

std::int64_t get_int(const json& j, const char* key, std::string_view what) {
  const auto& v = j.at(key);
  if (!v.is_number_integer() && !v.is_number_unsigned()) {
    throw Error(Errc::malformed_document,
                std::string(what) + ": '" + key + "' must be an integer");
  }
  if (v.is_number_unsigned() &&
      v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
    throw Error(Errc::malformed_document,
                std::string(what) + ": '" + key + "' out of range");
  }
  return v.get<std::int64_t>();
}

Version get_version(const json& j, const char* key, std::string_view what) {
  try {
    return Version::parse(get_string(j, key, what));
  } catch (const Error& e) {
    if (e.code() == Errc::malformed_document) throw;
    throw Error(Errc::malformed_document, std::string(what) + ": " + e.detail());
  }
}

}  // namespace

bool is_valid_identifier(std::string_view s) {
  if (s.empty() || s.size() > 64) return false;
  auto lower_alnum = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
  };
  if (!lower_alnum(s[0])) return false;
  for (char c : s.substr(1)) {
    if (!lower_alnum(c) && c != '_' && c != '-') return false;
  }
  return true;
}

PackageCoord PackageCoord::parse(std::string_view text) {
  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos || text.find('/', slash + 1) != std::string_view::npos) {
    throw Error(Errc::bad_coord, "expected NAMESPACE/NAME, got '" + std::string(text) + "'");
  }
  PackageCoord coord{std::string(text.substr(0, slash)), std::string(text.substr(slash + 1))};
  if (!is_valid_identifier(coord.ns) || !is_valid_identifier(coord.name)) {
    throw Error(Errc::bad_coord, "invalid coordinate '" + std::string(text) + "'");
  }
  return coord;
}

json PackageManifest::to_json() const {
  json deps = json::array();
  for (const Dependency& d : dependencies) {
    deps.push_back({{"name", d.coord.name}, {"namespace", d.coord.ns}, {"req", d.req.str()}});
  }
  json j = {
      {"author_id", author_id},   {"dependencies", deps},
      {"description", description}, {"license", license},
      {"name", coord.name},       {"namespace", coord.ns},
      {"payload_hash", payload_hash}, {"version", version.str()},
  };
  if (test_command) j["test_command"] = *test_command;
  return j;
}

PackageManifest PackageManifest::from_json(const json& j) {
  require_keys(j,
               {"author_id", "dependencies", "description", "license", "name",
                "namespace", "payload_hash", "version"},
               {"test_command"}, "manifest");
  PackageManifest m;
  m.author_id = get_string(j, "author_id", "manifest");
  m.description = get_string(j, "description", "manifest");
  m.license = get_string(j, "license", "manifest");
  m.coord.name = get_string(j, "name", "manifest");
  m.coord.ns = get_string(j, "namespace", "manifest");
  m.payload_hash = get_string(j, "payload_hash", "manifest");
  m.version = get_version(j, "version", "manifest");
  if (j.contains("test_command")) {
    m.test_command = get_string(j, "test_command", "manifest");
  }
  const auto& deps = j.at("dependencies");
  if (!deps.is_array()) {
    throw Error(Errc::malformed_document, "manifest: 'dependencies' must be an array");
  }
  for (const auto& d : deps) {
    require_keys(d, {"name", "namespace", "req"}, {}, "dependency");
    Dependency dep;
    dep.coord.name = get_string(d, "name", "dependency");
    dep.coord.ns = get_string(d, "namespace", "dependency");
    try {
      dep.req = VersionReq::parse(get_string(d, "req", "dependency"));
    } catch (const Error& e) {
      if (e.code() == Errc::malformed_document) throw;
      throw Error(Errc::malformed_document, "dependency: " + e.detail());
    }
    m.dependencies.push_back(std::move(dep));
  }
  return m;
}

json SignedManifest::to_json() const {
  return {{"manifest", manifest.to_json()}, {"signature", signature}};
}

std::string SignedManifest::encode() const { return canonical_encode(to_json()); }

SignedManifest SignedManifest::from_json(const json& j) {
  require_keys(j, {"manifest", "signature"}, {}, "signed manifest");
  SignedManifest sm;
  sm.manifest = PackageManifest::from_json(j.at("manifest"));
  sm.signature = get_string(j, "signature", "signed manifest");
  return sm;
}

SignedManifest SignedManifest::decode(std::string_view bytes) {
  json j = json::parse(bytes, nullptr, false);
  if (j.is_discarded()) {
    throw Error(Errc::malformed_document, "signed manifest: invalid JSON");
  }
  return from_json(j);
}

json PackageEntry::to_json() const {
  return {{"archive_hash", archive_hash}, {"archive_size", archive_size},
          {"manifest_hash", manifest_hash}, {"name", coord.name},
          {"namespace", coord.ns},          {"version", version.str()}};
}

PackageEntry PackageEntry::from_json(const json& j) {
  require_keys(j, {"archive_hash", "archive_size", "manifest_hash", "name",
                   "namespace", "version"},
               {}, "entry");
  PackageEntry e;
  e.archive_hash = get_string(j, "archive_hash", "entry");
  e.manifest_hash = get_string(j, "manifest_hash", "entry");
  e.coord.name = get_string(j, "name", "entry");
  e.coord.ns = get_string(j, "namespace", "entry");
  e.version = get_version(j, "version", "entry");
  std::int64_t size = get_int(j, "archive_size", "entry");
  if (size < 0) {
    throw Error(Errc::malformed_document, "entry: negative archive_size");
  }
  e.archive_size = static_cast<std::uint64_t>(size);
  return e;
}

json RootMetadata::to_json(bool include_signature) const {
  json author_map = json::object();
  for (const auto& [id, key] : authors) author_map[id] = key;
  json entry_list = json::array();
  for (const PackageEntry& e : entries) entry_list.push_back(e.to_json());
  json j = {
      {"authors", author_map},       {"entries", entry_list},
      {"expires_at", expires_at},    {"format_version", format_version},
      {"generated_at", generated_at}, {"root_version", root_version},
  };
  if (include_signature) j["signature"] = signature;
  return j;
}

std::string RootMetadata::signing_bytes() const { return canonical_encode(to_json(false)); }

std::string RootMetadata::encode() const { return canonical_encode(to_json(true)); }

RootMetadata RootMetadata::from_json(const json& j) {
  require_keys(j,
               {"authors", "entries", "expires_at", "format_version", "generated_at",
                "root_version", "signature"},
               {}, "root metadata");
  RootMetadata r;
  r.format_version = get_int(j, "format_version", "root metadata");
  r.root_version = get_int(j, "root_version", "root metadata");
  r.generated_at = get_int(j, "generated_at", "root metadata");
  r.expires_at = get_int(j, "expires_at", "root metadata");
  r.signature = get_string(j, "signature", "root metadata");
  const auto& author_map = j.at("authors");
  if (!author_map.is_object()) {
    throw Error(Errc::malformed_document, "root metadata: 'authors' must be an object");
  }
  for (auto it = author_map.begin(); it != author_map.end(); ++it) {
    if (!it.value().is_string()) {
      throw Error(Errc::malformed_document, "root metadata: author key must be a string");
    }
    r.authors[it.key()] = it.value().get<std::string>();
  }
  const auto& entry_list = j.at("entries");
  if (!entry_list.is_array()) {
    throw Error(Errc::malformed_document, "root metadata: 'entries' must be an array");
  }
  for (const auto& e : entry_list) r.entries.push_back(PackageEntry::from_json(e));
  return r;
}

RootMetadata RootMetadata::decode(std::string_view bytes) {
  json j = json::parse(bytes, nullptr, false);
  if (j.is_discarded()) {
    throw Error(Errc::malformed_document, "root metadata: invalid JSON");
  }
  return from_json(j);
}

const PackageEntry* RootMetadata::find(const PackageCoord& coord, const Version& v) const {
  for (const PackageEntry& e : entries) {
    if (e.coord == coord && e.version == v) return &e;
  }
  return nullptr;
}

std::vector<Version> RootMetadata::versions_of(const PackageCoord& coord) const {
  std::vector<Version> out;
  for (const PackageEntry& e : entries) {
    if (e.coord == coord) out.push_back(e.version);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Violation> validate_manifest(const PackageManifest& m,
                                         const std::set<std::string>& license_allowlist) {
  std::vector<Violation> out;
  if (!is_valid_identifier(m.coord.ns) || !is_valid_identifier(m.coord.name)) {
    out.push_back({Errc::bad_coord, "coordinate '" + m.coord.str() + "'"});
  }
  if (!license_allowlist.contains(m.license)) {
    out.push_back({Errc::bad_license, "license '" + m.license + "' not in allowlist"});
  }
  std::set<PackageCoord> seen;
  for (const Dependency& d : m.dependencies) {
    if (!is_valid_identifier(d.coord.ns) || !is_valid_identifier(d.coord.name)) {
      out.push_back({Errc::bad_coord, "dependency coordinate '" + d.coord.str() + "'"});
    }
    if (d.coord == m.coord) {
      out.push_back({Errc::self_dependency, "package depends on itself"});
    }
    if (!seen.insert(d.coord).second) {
      out.push_back({Errc::duplicate_dependency, "dependency '" + d.coord.str() + "'"});
    }
  }
  if (m.test_command && !is_safe_relpath(*m.test_command)) {
    out.push_back({Errc::unsafe_test_path, "test_command '" + *m.test_command + "'"});
  }
  if (!is_hex_digest(m.payload_hash)) {
    out.push_back({Errc::malformed_hex, "payload_hash"});
  }
  return out;
}

std::vector<Violation> validate_root(const RootMetadata& r) {
  std::vector<Violation> out;
  if (r.format_version != 1) {
    out.push_back({Errc::invalid_field, "format_version must be 1"});
  }
  if (r.root_version < 1) {
    out.push_back({Errc::invalid_field, "root_version must be positive"});
  }
  if (r.expires_at <= r.generated_at) {
    out.push_back({Errc::bad_expiry_window, "expires_at must exceed generated_at"});
  }
  for (std::size_t i = 0; i + 1 < r.entries.size(); ++i) {
    auto key = [](const PackageEntry& e) {
      return std::tie(e.coord.ns, e.coord.name, e.version);
    };
    if (key(r.entries[i]) == key(r.entries[i + 1])) {
      out.push_back({Errc::duplicate_entry,
                     "entry '" + r.entries[i].coord.str() + "@" +
                         r.entries[i].version.str() + "'"});
    } else if (key(r.entries[i + 1]) < key(r.entries[i])) {
      out.push_back({Errc::unsorted_entries,
                     "entry '" + r.entries[i + 1].coord.str() + "' out of order"});
    }
  }
  for (const PackageEntry& e : r.entries) {
    if (!is_valid_identifier(e.coord.ns) || !is_valid_identifier(e.coord.name)) {
      out.push_back({Errc::bad_coord, "entry coordinate '" + e.coord.str() + "'"});
    }
    if (!is_hex_digest(e.archive_hash) || !is_hex_digest(e.manifest_hash)) {
      out.push_back({Errc::malformed_hex, "hashes of '" + e.coord.str() + "'"});
    }
    if (e.archive_size == 0) {
      out.push_back({Errc::invalid_field,
                     "archive_size of '" + e.coord.str() + "' must be positive"});
    }
  }
  for (const auto& [id, key] : r.authors) {
    if (!is_valid_identifier(id)) {
      out.push_back({Errc::bad_coord, "author id '" + id + "'"});
    }
    if (key.size() != 64 || !is_lower_hex(key)) {
      out.push_back({Errc::malformed_hex, "public key of '" + id + "'"});
    }
  }
  if (r.signature.size() != 128 || !is_lower_hex(r.signature)) {
    out.push_back({Errc::malformed_hex, "signature"});
  }
  return out;
}

std::string describe(const std::vector<Violation>& violations) {
  std::string out;
  for (const Violation& v : violations) {
    if (!out.empty()) out += "; ";
    out += std::string(errc_name(v.code)) + " (" + v.message + ")";
  }
  return out;
}

}  // namespace cban
