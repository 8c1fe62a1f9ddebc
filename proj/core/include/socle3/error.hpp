#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace socle3 {

// Malformed polynomial text. `offset` is the 0-based character position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// A mathematical precondition of an operation was violated
// (zero dual generator, degenerate cubic, mismatched variable spaces, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a computation would exceed the configured size limit.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace socle3
