#pragma once

#include <stdexcept>
#include <string>

namespace caylabel {

// Malformed documents, out-of-range indices, or violated operation
// preconditions. Maps to exit code 2 in the command line tool.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured resource cap was exceeded (enumeration order, solver size,
// campaign budget). Maps to exit code 3 in the command line tool.
struct CapError : std::runtime_error {
  explicit CapError(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal consistency failure. Always a bug in this library, never bad
// user input; callers should not attempt to recover.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace caylabel
