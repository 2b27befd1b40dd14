#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace equivguard::support {

struct ProcessResult {
  int exit_code = -1;
  bool timed_out = false;
  std::string out;
  std::string err;
};

// Runs argv[0] with the given arguments, feeding stdin_data and capturing
// both output streams. Blocks until exit or timeout; on timeout the child
// is killed and timed_out is set.
ProcessResult run_process(const std::vector<std::string>& argv,
                          const std::string& stdin_data,
                          std::optional<std::chrono::milliseconds> timeout = {});

// Splits a command string on whitespace (no quoting rules; command paths
// with spaces are not supported).
std::vector<std::string> split_command(const std::string& command);

} // namespace equivguard::support
