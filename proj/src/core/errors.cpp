// Copyright 2026 The CBAN Authors
// SPDX-License-Identifier: Apache-2.0
#include "cban/core/errors.hpp"

namespace cban {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::non_canonicalizable: return "non-canonicalizable";
    case Errc::malformed_document: return "malformed-document";
    case Errc::malformed_version: return "malformed-version";
    case Errc::malformed_requirement: return "malformed-requirement";
    case Errc::malformed_hex: return "malformed-hex";
    case Errc::duplicate_path: return "duplicate-path";
    case Errc::unsafe_path: return "unsafe-path";
    case Errc::bad_archive: return "bad-archive";
    case Errc::bad_coord: return "bad-coord";
    case Errc::bad_license: return "bad-license";
    case Errc::self_dependency: return "self-dependency";
    case Errc::duplicate_dependency: return "duplicate-dependency";
    case Errc::unsafe_test_path: return "unsafe-test-path";
    case Errc::unsorted_entries: return "unsorted-entries";
    case Errc::duplicate_entry: return "duplicate-entry";
    case Errc::bad_expiry_window: return "bad-expiry-window";
    case Errc::invalid_field: return "invalid-field";
    case Errc::bad_seed_length: return "bad-seed-length";
    case Errc::malformed_key: return "malformed-key";
    case Errc::bad_manifest_signature: return "bad-manifest-signature";
    case Errc::payload_hash_mismatch: return "payload-hash-mismatch";
    case Errc::policy_violation: return "policy-violation";
    case Errc::not_owner: return "not-owner";
    case Errc::duplicate_version: return "duplicate-version";
    case Errc::unknown_author: return "unknown-author";
    case Errc::unknown_package: return "unknown-package";
    case Errc::not_authorized: return "not-authorized";
    case Errc::duplicate_author: return "duplicate-author";
    case Errc::store_corrupt: return "store-corrupt";
    case Errc::master_unreachable: return "master-unreachable";
    case Errc::partial_fetch_aborted: return "partial-fetch-aborted";
    case Errc::not_synced: return "not-synced";
    case Errc::all_mirrors_failed: return "all-mirrors-failed";
    case Errc::hash_mismatch: return "hash-mismatch";
    case Errc::bad_signature: return "bad-signature";
    case Errc::embedded_manifest_mismatch: return "embedded-manifest-mismatch";
    case Errc::coord_mismatch: return "coord-mismatch";
    case Errc::unresolvable: return "unresolvable";
    case Errc::dependency_cycle: return "dependency-cycle";
    case Errc::test_failed: return "test-failed";
    case Errc::state_locked: return "state-locked";
    case Errc::corrupt_state: return "corrupt-state";
    case Errc::harness_setup_failed: return "harness-setup-failed";
    case Errc::io_error: return "io-error";
    case Errc::usage_error: return "usage-error";
  }
  return "unknown-error";
}

}  // namespace cban
