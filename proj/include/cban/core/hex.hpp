// Copyright 2026 The CBAN Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cban {

// All hex in metadata documents is lowercase; decoding is strict about that.
std::string to_hex(const unsigned char* data, std::size_t len);
std::string to_hex(std::string_view data);
std::optional<std::vector<unsigned char>> from_hex(std::string_view hex);

bool is_lower_hex(std::string_view s);
inline bool is_hex_digest(std::string_view s) { return s.size() == 64 && is_lower_hex(s); }

}  // namespace cban
