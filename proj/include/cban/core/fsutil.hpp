// Copyright 2026 The CBAN Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace cban {

std::string read_file(const std::filesystem::path& path);  // throws Errc::io_error
std::optional<std::string> read_file_if_exists(const std::filesystem::path& path);

// Creates parent directories, writes to a temp file in the same
// directory, then renames over the target. Readers see the old bytes or
// the new bytes, never a torn write.
void write_file_atomic(const std::filesystem::path& path, std::string_view data);

// Self-removing scratch directory under the system temp dir.
class TempDir {
 public:
  explicit TempDir(std::string_view prefix = "cban");
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace cban
