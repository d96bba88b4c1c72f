// Copyright 2026 The CBAN Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <tuple>

#include <httplib.h>

#include "cban/core/types.hpp"

namespace cban::mirror {

struct Config {
  std::string master_url;
  std::string root_pubkey;  // hex, pins the master
  std::filesystem::path data_dir;
  int connect_timeout_ms = 2000;
};

struct SyncReport {
  std::optional<std::int64_t> old_version;
  std::int64_t new_version = 0;
  int fetched = 0;   // archives downloaded
  int verified = 0;  // hash checks performed (archives + manifests)
  std::optional<std::string> rejected_reason;  // bad-signature | expired | rollback | hash-mismatch

  nlohmann::json to_json() const;
};

// Read-only replica. A root document is adopted only when its signature
// verifies under the pinned key, it has not expired, and its version
// does not roll back; file downloads are hash-checked against the
// adopted entries and any mismatch aborts the whole sync. Serving reads
// run against an immutable snapshot that is swapped atomically, so no
// reader ever sees a mix of two syncs.
class Mirror {
 public:
  explicit Mirror(Config config);

  // Throws Errc::master_unreachable; rejections come back in the report
  // with no state change.
  SyncReport sync_once(std::int64_t now);

  bool has_snapshot() const;
  std::optional<std::int64_t> current_version() const;
  std::string root_bytes() const;  // throws Errc::not_synced when empty
  bool is_stale(std::int64_t now) const;

  // GETs for /root.json, /meta/..., /pkg/...; every POST answers 405.
  void attach_routes(httplib::Server& server);

 private:
  struct Snapshot {
    std::string root_bytes;
    RootMetadata root;
    std::set<std::tuple<std::string, std::string, std::string>> index;  // ns, name, version
  };

  std::shared_ptr<const Snapshot> snapshot() const;
  void adopt(std::shared_ptr<const Snapshot> snap);
  static std::shared_ptr<const Snapshot> make_snapshot(std::string bytes, RootMetadata root);

  Config config_;
  mutable std::mutex mu_;
  std::shared_ptr<const Snapshot> snap_;
};

}  // namespace cban::mirror
