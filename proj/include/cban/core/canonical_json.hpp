// Copyright 2026 The CBAN Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include <json.hpp>

namespace cban {

// Deterministic byte encoding for every signed or hashed document.
//
// Rules: UTF-8 JSON, object keys sorted by byte value, no insignificant
// whitespace, integers in base 10, strings minimally escaped (backslash,
// double quote, and control characters below 0x20 only). Accepted value
// kinds are objects, arrays, strings, booleans, and integers within the
// signed 64-bit range. Anything else (floats, null, out-of-range
// integers) throws Errc::non_canonicalizable; signatures over "roughly
// the same" bytes are worthless.
std::string canonical_encode(const nlohmann::json& doc);

// parse + canonical_encode. Rejects documents that are not already in
// canonical form, which is how stored metadata is checked byte-exactly.
std::string recanonicalize(std::string_view bytes);

}  // namespace cban
