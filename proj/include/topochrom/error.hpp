#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace topochrom {

// Invalid arguments: n <= 2k, r = 0, loops, out-of-range endpoints, ...
struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An input exceeds a materialization or solver cap.
struct CapacityError : std::length_error {
  using std::length_error::length_error;
};

// Malformed text or JSON input; line is 1-based, 0 when unknown.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace topochrom
