#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tamari {

/// A requested degree or size lies beyond what the library is configured to
/// materialize.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Checked integer arithmetic left the 64-bit range.
class OverflowError : public CapacityError {
 public:
  using CapacityError::CapacityError;
};

class DegreeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// An input violates a documented precondition (e.g. a matrix that is not
/// unitriangular under the supplied extension).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace tamari
