// Copyright 2026 The CBAN Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cban {

// Strict three-component numeric version. The grammar is deliberately
// small: "MAJOR.MINOR.PATCH", decimal, no leading zeros, no pre-release
// or build tags. render(parse(s)) == s for every accepted s.
struct Version {
  std::uint64_t major = 0;
  std::uint64_t minor = 0;
  std::uint64_t patch = 0;

  auto operator<=>(const Version&) const = default;

  std::string str() const;
  static Version parse(std::string_view text);  // throws Errc::malformed_version
};

enum class Comparator { eq, ge, gt, le, lt, caret };

std::string_view comparator_token(Comparator op);

struct Constraint {
  Comparator op = Comparator::ge;
  Version version;

  bool matches(const Version& v) const;
  auto operator<=>(const Constraint&) const = default;
};

// Conjunction of comparator constraints, rendered comma-joined with no
// spaces, e.g. ">=1.0.0,<2.0.0" or "^1.2.3".
struct VersionReq {
  std::vector<Constraint> constraints;

  bool matches(const Version& v) const;
  std::string str() const;
  static VersionReq parse(std::string_view text);  // throws Errc::malformed_requirement
  static VersionReq any();                         // ">=0.0.0"

  auto operator<=>(const VersionReq&) const = default;
};

// Upper bound used by the caret operator: ^1.2.3 allows <2.0.0,
// ^0.3.1 allows <0.4.0.
Version next_major(const Version& v);

}  // namespace cban
