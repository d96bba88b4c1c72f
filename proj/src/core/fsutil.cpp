// Copyright 2026 The CBAN Authors
// SPDX-License-Identifier: Apache-2.0
#include "cban/core/fsutil.hpp"

#include <unistd.h>

#include <fstream>
#include <random>
#include <sstream>

#include "cban/core/errors.hpp"

namespace cban {

namespace fs = std::filesystem;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(Errc::io_error, "cannot open " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (!in.good() && !in.eof()) {
    throw Error(Errc::io_error, "read failed for " + path.string());
  }
  return std::move(buf).str();
}

std::optional<std::string> read_file_if_exists(const fs::path& path) {
  std::error_code ec;
  if (!fs::exists(path, ec) || ec) return std::nullopt;
  return read_file(path);
}

void write_file_atomic(const fs::path& path, std::string_view data) {
  fs::path dir = path.parent_path();
  if (!dir.empty()) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
      throw Error(Errc::io_error, "cannot create " + dir.string());
    }
  }
  fs::path tmp = path;
  tmp += ".tmp-" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw Error(Errc::io_error, "cannot open " + tmp.string());
    }
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out.good()) {
      throw Error(Errc::io_error, "write failed for " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(Errc::io_error, "rename failed for " + path.string());
  }
}

TempDir::TempDir(std::string_view prefix) {
  std::random_device rd;
  std::mt19937_64 rng(rd());
  for (int attempt = 0; attempt < 32; ++attempt) {
    std::ostringstream name;
    name << prefix << "-" << ::getpid() << "-" << std::hex << rng();
    fs::path candidate = fs::temp_directory_path() / name.str();
    std::error_code ec;
    if (fs::create_directory(candidate, ec) && !ec) {
      path_ = candidate;
      return;
    }
  }
  throw Error(Errc::io_error, "cannot create temp directory");
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

}  // namespace cban
