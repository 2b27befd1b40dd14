#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace equivguard::support {

// Half-open byte range into a named source unit. file_index refers to the
// order of sources inside a compilation; -1 marks compiler-generated code.
struct SourceRange {
  int32_t file_index = -1;
  uint32_t offset = 0;
  uint32_t length = 0;

  bool generated() const { return file_index < 0; }
  bool contains(const SourceRange& inner) const {
    return file_index == inner.file_index && inner.offset >= offset &&
           inner.offset + inner.length <= offset + length;
  }
  bool overlaps(const SourceRange& other) const {
    return file_index == other.file_index && offset < other.offset + other.length &&
           other.offset < offset + length;
  }
  bool operator==(const SourceRange&) const = default;
};

struct Diagnostic {
  enum class Severity { Info, Warning, Error };
  Severity severity = Severity::Warning;
  std::string code;       // stable machine identifier, e.g. "unresolved-jump"
  std::string message;
  std::optional<SourceRange> where;
};

using Diagnostics = std::vector<Diagnostic>;

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class CompilerNotFound : public Error {
public:
  explicit CompilerNotFound(const std::string& version)
      : Error("no installed compiler satisfies: " + version) {}
};

class CompileError : public Error {
public:
  CompileError(std::string what, Diagnostics diags)
      : Error(std::move(what)), diagnostics(std::move(diags)) {}
  Diagnostics diagnostics;
};

class ImportUnresolved : public Error {
public:
  explicit ImportUnresolved(const std::string& path)
      : Error("unresolved import: " + path) {}
};

class NotVerified : public Error {
public:
  explicit NotVerified(const std::string& address)
      : Error("no verified source published for " + address) {}
};

class RateLimited : public Error {
public:
  explicit RateLimited(int retry_after_seconds)
      : Error("explorer rate limit hit"), retry_after(retry_after_seconds) {}
  int retry_after;
};

class NetworkError : public Error {
public:
  using Error::Error;
};

class ManifestParseError : public Error {
public:
  using Error::Error;
};

class TruncatedPush : public Error {
public:
  explicit TruncatedPush(uint32_t at)
      : Error("push immediate overruns code end at offset " + std::to_string(at)),
        offset(at) {}
  uint32_t offset;
};

class PathBudgetExceeded : public Error {
public:
  explicit PathBudgetExceeded(size_t n)
      : Error("path enumeration exceeded budget of " + std::to_string(n)), count(n) {}
  size_t count;
};

class SolverUnavailable : public Error {
public:
  using Error::Error;
};

} // namespace equivguard::support
