// Copyright 2026 The CBAN Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <exception>
#include <string>
#include <string_view>

namespace cban {

// Stable error identifiers. The kebab-case names returned by errc_name()
// appear on the wire (HTTP error documents), on stderr, and in scenario
// reports, so renaming one is a breaking change.
enum class Errc {
  // encoding / parsing
  non_canonicalizable,
  malformed_document,
  malformed_version,
  malformed_requirement,
  malformed_hex,
  duplicate_path,
  unsafe_path,
  bad_archive,

  // structural validation
  bad_coord,
  bad_license,
  self_dependency,
  duplicate_dependency,
  unsafe_test_path,
  unsorted_entries,
  duplicate_entry,
  bad_expiry_window,
  invalid_field,

  // signing
  bad_seed_length,
  malformed_key,

  // registry policy
  bad_manifest_signature,
  payload_hash_mismatch,
  policy_violation,
  not_owner,
  duplicate_version,
  unknown_author,
  unknown_package,
  not_authorized,
  duplicate_author,
  store_corrupt,

  // mirror
  master_unreachable,
  partial_fetch_aborted,
  not_synced,

  // client verification and network
  all_mirrors_failed,
  hash_mismatch,
  bad_signature,
  embedded_manifest_mismatch,
  coord_mismatch,
  unresolvable,
  dependency_cycle,
  test_failed,
  state_locked,
  corrupt_state,

  // harness
  harness_setup_failed,

  // plumbing
  io_error,
  usage_error,
};

std::string_view errc_name(Errc code);

class Error : public std::exception {
 public:
  Error(Errc code, std::string detail)
      : code_(code),
        detail_(std::move(detail)),
        what_(std::string(errc_name(code)) + ": " + detail_) {}

  Errc code() const { return code_; }
  const std::string& detail() const { return detail_; }
  const char* what() const noexcept override { return what_.c_str(); }

 private:
  Errc code_;
  std::string detail_;
  std::string what_;
};

}  // namespace cban
