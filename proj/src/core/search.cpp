// Copyright 2026 The CBAN Authors
// SPDX-License-Identifier: Apache-2.0
#include "cban/core/search.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace cban {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool contains_ci(std::string_view haystack, const std::string& lowered_needle) {
  if (lowered_needle.empty()) return true;
  return lower(haystack).find(lowered_needle) != std::string::npos;
}

}  // namespace

std::vector<PackageEntry> latest_entries(const std::vector<PackageEntry>& entries) {
  std::map<PackageCoord, PackageEntry> latest;
  for (const PackageEntry& e : entries) {
    auto it = latest.find(e.coord);
    if (it == latest.end() || it->second.version < e.version) {
      latest[e.coord] = e;
    }
  }
  std::vector<PackageEntry> out;
  out.reserve(latest.size());
  for (auto& [coord, entry] : latest) out.push_back(std::move(entry));
  return out;
}

std::vector<PackageEntry> search_entries(
    const std::vector<PackageEntry>& entries,
    const std::function<std::string(const PackageEntry&)>& description_of,
    std::string_view query) {
  std::string needle = lower(query);
  std::vector<PackageEntry> out;
  for (const PackageEntry& e : latest_entries(entries)) {
    if (contains_ci(e.coord.ns, needle) || contains_ci(e.coord.name, needle) ||
        contains_ci(description_of(e), needle)) {
      out.push_back(e);
    }
  }
  return out;
}

}  // namespace cban
