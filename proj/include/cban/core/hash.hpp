// Copyright 2026 The CBAN Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cban {

// SHA-256, lowercase hex, 64 chars. The single hash algorithm of the
// format (format_version 1 has no hash agility).
std::string hash_bytes(std::string_view data);

// Order-insensitive digest over a file tree:
//   hash_bytes(canonical_encode(sorted [[path, hash_bytes(content)], ...]))
// Binds a manifest to the archive payload it was signed for.
// Throws Errc::duplicate_path / Errc::unsafe_path.
std::string hash_payload(const std::vector<std::pair<std::string, std::string>>& files);

// Relative path with '/' separators, no empty, "." or ".." segments,
// no leading '/'. Used for archive members and test commands.
bool is_safe_relpath(std::string_view path);

}  // namespace cban
