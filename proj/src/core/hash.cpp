// Copyright 2026 The CBAN Authors
// SPDX-License-Identifier: Apache-2.0
#include "cban/core/hash.hpp"

#include <algorithm>
#include <set>

#include <sodium.h>

#include "cban/core/canonical_json.hpp"
#include "cban/core/errors.hpp"
#include "cban/core/hex.hpp"

namespace cban {

std::string hash_bytes(std::string_view data) {
  if (sodium_init() < 0) {
    throw Error(Errc::io_error, "libsodium initialization failed");
  }
  unsigned char digest[crypto_hash_sha256_BYTES];
  crypto_hash_sha256(digest, reinterpret_cast<const unsigned char*>(data.data()),
                     data.size());
  return to_hex(digest, sizeof(digest));
}

std::string hash_payload(const std::vector<std::pair<std::string, std::string>>& files) {
  std::set<std::string> seen;
  nlohmann::json items = nlohmann::json::array();
  for (const auto& [path, content] : files) {
    if (!is_safe_relpath(path)) {
      throw Error(Errc::unsafe_path, "payload path '" + path + "'");
    }
    if (!seen.insert(path).second) {
      throw Error(Errc::duplicate_path, "payload path '" + path + "'");
    }
    items.push_back(nlohmann::json::array({path, hash_bytes(content)}));
  }
  std::sort(items.begin(), items.end(),
            [](const nlohmann::json& a, const nlohmann::json& b) {
              return a[0].get_ref<const std::string&>() <
                     b[0].get_ref<const std::string&>();
            });
  return hash_bytes(canonical_encode(items));
}

bool is_safe_relpath(std::string_view path) {
  if (path.empty() || path.front() == '/' || path.back() == '/') return false;
  std::size_t start = 0;
  while (start <= path.size()) {
    std::size_t end = path.find('/', start);
    if (end == std::string_view::npos) end = path.size();
    std::string_view seg = path.substr(start, end - start);
    if (seg.empty() || seg == "." || seg == "..") return false;
    for (char c : seg) {
      if (static_cast<unsigned char>(c) < 0x20 || c == '\\') return false;
    }
    if (end == path.size()) break;
    start = end + 1;
  }
  return true;
}

}  // namespace cban
