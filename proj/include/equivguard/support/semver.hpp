#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace equivguard::support {

struct Semver {
  unsigned major = 0;
  unsigned minor = 0;
  unsigned patch = 0;

  auto operator<=>(const Semver&) const = default;
  std::string str() const;

  static std::optional<Semver> parse(std::string_view text);
  // Extracts the first x.y.z occurrence, e.g. from "0.8.26+commit.8a97fa7a"
  // or "Version: 0.8.26+...".
  static std::optional<Semver> extract(std::string_view text);
};

// Subset of node-style semver ranges, enough for solidity pragmas:
// comparators (^, ~, >=, <=, >, <, =, bare version), space = AND, || = OR.
class SemverRange {
public:
  static std::optional<SemverRange> parse(std::string_view text);

  bool matches(const Semver& v) const;
  const std::string& str() const { return text_; }

private:
  struct Comparator {
    enum class Op { Eq, Lt, Le, Gt, Ge, Caret, Tilde } op;
    Semver version;
    bool matches(const Semver& v) const;
  };
  std::vector<std::vector<Comparator>> alternatives_; // OR of ANDs
  std::string text_;
};

} // namespace equivguard::support
