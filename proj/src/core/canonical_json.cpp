// Copyright 2026 The CBAN Authors
// SPDX-License-Identifier: Apache-2.0
#include "cban/core/canonical_json.hpp"

#include <cstdint>
#include <limits>

#include "cban/core/errors.hpp"

namespace cban {

namespace {

void append_escaped(const std::string& s, std::string& out) {
  static constexpr char kHex[] = "0123456789abcdef";
  out.push_back('"');
  for (unsigned char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\b': out += "\\b"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\f': out += "\\f"; break;
      case '\r': out += "\\r"; break;
      default:
        if (c < 0x20) {
          out += "\\u00";
          out.push_back(kHex[c >> 4]);
          out.push_back(kHex[c & 0x0f]);
        } else {
          out.push_back(static_cast<char>(c));
        }
    }
  }
  out.push_back('"');
}

void encode_value(const nlohmann::json& v, std::string& out) {
  using value_t = nlohmann::json::value_t;
  switch (v.type()) {
    case value_t::object: {
      out.push_back('{');
      bool first = true;
      // nlohmann's object container is a std::map keyed on std::string,
      // so iteration order is already byte-value ascending.
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out.push_back(',');
        first = false;
        append_escaped(it.key(), out);
        out.push_back(':');
        encode_value(it.value(), out);
      }
      out.push_back('}');
      break;
    }
    case value_t::array: {
      out.push_back('[');
      bool first = true;
      for (const auto& elem : v) {
        if (!first) out.push_back(',');
        first = false;
        encode_value(elem, out);
      }
      out.push_back(']');
      break;
    }
    case value_t::string:
      append_escaped(v.get_ref<const std::string&>(), out);
      break;
    case value_t::boolean:
      out += v.get<bool>() ? "true" : "false";
      break;
    case value_t::number_integer:
      out += std::to_string(v.get<std::int64_t>());
      break;
    case value_t::number_unsigned: {
      std::uint64_t u = v.get<std::uint64_t>();
      if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
        throw Error(Errc::non_canonicalizable, "integer exceeds signed 64-bit range");
      }
      out += std::to_string(u);
      break;
    }
    case value_t::number_float:
      throw Error(Errc::non_canonicalizable, "floating point value");
    case value_t::null:
      throw Error(Errc::non_canonicalizable, "null value");
    default:
      throw Error(Errc::non_canonicalizable, "unsupported value type");
  }
}

}  // namespace

std::string canonical_encode(const nlohmann::json& doc) {
  std::string out;
  encode_value(doc, out);
  return out;
}

std::string recanonicalize(std::string_view bytes) {
  nlohmann::json doc = nlohmann::json::parse(bytes, nullptr, false);
  if (doc.is_discarded()) {
    throw Error(Errc::malformed_document, "invalid JSON");
  }
  return canonical_encode(doc);
}

}  // namespace cban
