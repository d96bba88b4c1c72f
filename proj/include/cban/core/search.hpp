// Copyright 2026 The CBAN Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <string_view>
#include <vector>

#include "cban/core/types.hpp"

namespace cban {

// Latest version of each coordinate, sorted by (namespace, name).
std::vector<PackageEntry> latest_entries(const std::vector<PackageEntry>& entries);

// Case-insensitive substring match over namespace, name, and
// description; empty query matches everything. Only the latest version
// per coordinate is returned. Shared by the registry /search endpoint
// and the client-side search.
std::vector<PackageEntry> search_entries(
    const std::vector<PackageEntry>& entries,
    const std::function<std::string(const PackageEntry&)>& description_of,
    std::string_view query);

}  // namespace cban
