// Copyright 2026 The CBAN Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cban {

struct ArchiveMember {
  std::string path;  // archive-relative, '/' separators
  std::string data;
  bool executable = false;
};

// Package archives are gzip-compressed ustar. The writer is
// deterministic: members sorted by path, mtime 0, uid/gid 0, fixed
// modes, fixed gzip header. manifest.json at the archive root is the
// SignedManifest; every other member is payload.
std::string write_archive(std::vector<ArchiveMember> members);

// Strict reader for the same subset: plain files and directories only.
// Unsafe or duplicate paths and any gzip/tar damage throw
// Errc::bad_archive. max_unpacked caps the inflated size.
std::vector<ArchiveMember> read_archive(std::string_view bytes,
                                        std::uint64_t max_unpacked = 256ull << 20);

inline constexpr std::string_view kManifestMemberName = "manifest.json";

}  // namespace cban
