// Copyright 2026 The CBAN Authors
// SPDX-License-Identifier: Apache-2.0
#include "cban/core/version.hpp"

#include <limits>

#include "cban/core/errors.hpp"

namespace cban {

namespace {

// One decimal component: "0" or a digit string without a leading zero,
// value within signed 64-bit range (canonical JSON cannot carry more).
std::uint64_t parse_component(std::string_view text, std::string_view whole) {
  if (text.empty()) {
    throw Error(Errc::malformed_version, "empty component in '" + std::string(whole) + "'");
  }
  if (text.size() > 1 && text.front() == '0') {
    throw Error(Errc::malformed_version, "leading zero in '" + std::string(whole) + "'");
  }
  std::uint64_t value = 0;
  constexpr std::uint64_t kMax = std::numeric_limits<std::int64_t>::max();
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw Error(Errc::malformed_version, "non-digit in '" + std::string(whole) + "'");
    }
    std::uint64_t digit = static_cast<std::uint64_t>(c - '0');
    if (value > (kMax - digit) / 10) {
      throw Error(Errc::malformed_version, "component overflow in '" + std::string(whole) + "'");
    }
    value = value * 10 + digit;
  }
  return value;
}

}  // namespace

std::string Version::str() const {
  return std::to_string(major) + "." + std::to_string(minor) + "." + std::to_string(patch);
}

Version Version::parse(std::string_view text) {
  std::size_t first = text.find('.');
  std::size_t second = first == std::string_view::npos ? std::string_view::npos
                                                       : text.find('.', first + 1);
  if (first == std::string_view::npos || second == std::string_view::npos ||
      text.find('.', second + 1) != std::string_view::npos) {
    throw Error(Errc::malformed_version,
                "expected MAJOR.MINOR.PATCH, got '" + std::string(text) + "'");
  }
  Version v;
  v.major = parse_component(text.substr(0, first), text);
  v.minor = parse_component(text.substr(first + 1, second - first - 1), text);
  v.patch = parse_component(text.substr(second + 1), text);
  return v;
}

std::string_view comparator_token(Comparator op) {
  switch (op) {
    case Comparator::eq: return "=";
    case Comparator::ge: return ">=";
    case Comparator::gt: return ">";
    case Comparator::le: return "<=";
    case Comparator::lt: return "<";
    case Comparator::caret: return "^";
  }
  return "";
}

Version next_major(const Version& v) {
  if (v.major > 0) return Version{v.major + 1, 0, 0};
  return Version{0, v.minor + 1, 0};
}

bool Constraint::matches(const Version& v) const {
  switch (op) {
    case Comparator::eq: return v == version;
    case Comparator::ge: return v >= version;
    case Comparator::gt: return v > version;
    case Comparator::le: return v <= version;
    case Comparator::lt: return v < version;
    case Comparator::caret: return v >= version && v < next_major(version);
  }
  return false;
}

bool VersionReq::matches(const Version& v) const {
  for (const Constraint& c : constraints) {
    if (!c.matches(v)) return false;
  }
  return true;
}

std::string VersionReq::str() const {
  std::string out;
  for (const Constraint& c : constraints) {
    if (!out.empty()) out.push_back(',');
    out += comparator_token(c.op);
    out += c.version.str();
  }
  return out;
}

VersionReq VersionReq::parse(std::string_view text) {
  VersionReq req;
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find(',', start);
    std::string_view piece = text.substr(
        start, end == std::string_view::npos ? std::string_view::npos : end - start);
    Constraint c;
    if (piece.starts_with(">=")) {
      c.op = Comparator::ge;
      piece.remove_prefix(2);
    } else if (piece.starts_with("<=")) {
      c.op = Comparator::le;
      piece.remove_prefix(2);
    } else if (piece.starts_with(">")) {
      c.op = Comparator::gt;
      piece.remove_prefix(1);
    } else if (piece.starts_with("<")) {
      c.op = Comparator::lt;
      piece.remove_prefix(1);
    } else if (piece.starts_with("=")) {
      c.op = Comparator::eq;
      piece.remove_prefix(1);
    } else if (piece.starts_with("^")) {
      c.op = Comparator::caret;
      piece.remove_prefix(1);
    } else {
      throw Error(Errc::malformed_requirement,
                  "missing comparator in '" + std::string(text) + "'");
    }
    try {
      c.version = Version::parse(piece);
    } catch (const Error& e) {
      throw Error(Errc::malformed_requirement, e.detail());
    }
    req.constraints.push_back(c);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  if (req.constraints.empty()) {
    throw Error(Errc::malformed_requirement, "empty requirement");
  }
  return req;
}

VersionReq VersionReq::any() {
  return VersionReq{{Constraint{Comparator::ge, Version{0, 0, 0}}}};
}

}  // namespace cban
