#pragma once

#include <stdexcept>
#include <string>

namespace rwre {

// Exit codes used by the CLI; library code throws the matching exception.
enum class ExitCode : int {
  ok = 0,
  config = 2,
  resource = 3,
  convergence = 4,
  internal = 5,
};

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Requested computation exceeds a configured cap (enumeration size, DP memory).
struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

// An iterative solver failed to bracket or converge.
struct ConvergenceError : std::runtime_error {
  explicit ConvergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace rwre
