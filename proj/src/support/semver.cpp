#include "equivguard/support/semver.hpp"

#include <cctype>
#include <sstream>

namespace equivguard::support {

std::string Semver::str() const {
  std::ostringstream os;
  os << major << '.' << minor << '.' << patch;
  return os.str();
}

std::optional<Semver> Semver::parse(std::string_view text) {
  Semver v;
  unsigned parts[3] = {0, 0, 0};
  size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      return std::nullopt;
    unsigned long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      ++pos;
    }
    parts[i] = static_cast<unsigned>(value);
    if (i < 2) {
      if (pos >= text.size() || text[pos] != '.') return std::nullopt;
      ++pos;
    }
  }
  // Tolerate a build/commit suffix, but not trailing garbage like "0.8.26.1".
  if (pos < text.size() && text[pos] != '+' && text[pos] != '-') return std::nullopt;
  v.major = parts[0];
  v.minor = parts[1];
  v.patch = parts[2];
  return v;
}

std::optional<Semver> Semver::extract(std::string_view text) {
  for (size_t i = 0; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) continue;
    if (i > 0 && (std::isalnum(static_cast<unsigned char>(text[i - 1])) || text[i - 1] == '.'))
      continue;
    size_t j = i;
    int dots = 0;
    while (j < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '.')) {
      if (text[j] == '.') ++dots;
      ++j;
    }
    if (dots >= 2)
      if (auto v = parse(text.substr(i, j - i))) return v;
    i = j;
  }
  return std::nullopt;
}

bool SemverRange::Comparator::matches(const Semver& v) const {
  switch (op) {
    case Op::Eq: return v == version;
    case Op::Lt: return v < version;
    case Op::Le: return v <= version;
    case Op::Gt: return v > version;
    case Op::Ge: return v >= version;
    case Op::Caret:
      // ^0.y.z pins the minor (solidity convention), ^x.y.z pins the major.
      if (version.major == 0)
        return v.major == 0 && v.minor == version.minor && v >= version;
      return v.major == version.major && v >= version;
    case Op::Tilde:
      return v.major == version.major && v.minor == version.minor && v >= version;
  }
  return false;
}

std::optional<SemverRange> SemverRange::parse(std::string_view text) {
  SemverRange range;
  range.text_ = std::string(text);

  size_t start = 0;
  std::vector<std::string_view> alternatives;
  while (true) {
    size_t bar = text.find("||", start);
    if (bar == std::string_view::npos) {
      alternatives.push_back(text.substr(start));
      break;
    }
    alternatives.push_back(text.substr(start, bar - start));
    start = bar + 2;
  }

  for (auto alt : alternatives) {
    std::vector<Comparator> comparators;
    size_t pos = 0;
    while (pos < alt.size()) {
      while (pos < alt.size() && std::isspace(static_cast<unsigned char>(alt[pos]))) ++pos;
      if (pos >= alt.size()) break;
      Comparator c{Comparator::Op::Eq, {}};
      if (alt[pos] == '^') { c.op = Comparator::Op::Caret; ++pos; }
      else if (alt[pos] == '~') { c.op = Comparator::Op::Tilde; ++pos; }
      else if (alt.substr(pos, 2) == ">=") { c.op = Comparator::Op::Ge; pos += 2; }
      else if (alt.substr(pos, 2) == "<=") { c.op = Comparator::Op::Le; pos += 2; }
      else if (alt[pos] == '>') { c.op = Comparator::Op::Gt; ++pos; }
      else if (alt[pos] == '<') { c.op = Comparator::Op::Lt; ++pos; }
      else if (alt[pos] == '=') { c.op = Comparator::Op::Eq; ++pos; }
      while (pos < alt.size() && std::isspace(static_cast<unsigned char>(alt[pos]))) ++pos;
      size_t end = pos;
      while (end < alt.size() && !std::isspace(static_cast<unsigned char>(alt[end]))) ++end;
      auto v = Semver::parse(alt.substr(pos, end - pos));
      if (!v) return std::nullopt;
      c.version = *v;
      comparators.push_back(c);
      pos = end;
    }
    if (comparators.empty()) return std::nullopt;
    range.alternatives_.push_back(std::move(comparators));
  }
  if (range.alternatives_.empty()) return std::nullopt;
  return range;
}

bool SemverRange::matches(const Semver& v) const {
  for (const auto& conjunction : alternatives_) {
    bool all = true;
    for (const auto& c : conjunction)
      if (!c.matches(v)) { all = false; break; }
    if (all) return true;
  }
  return false;
}

} // namespace equivguard::support
