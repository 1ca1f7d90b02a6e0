#pragma once

#include <stdexcept>
#include <string>

namespace nga {

// Bad user-supplied configuration, CLI usage, or snapshot/config mismatch.
// Maps to process exit code 1.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// I/O failures, malformed files, and other runtime errors. Exit code 2.
struct RuntimeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace nga
