#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kmroot {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input that violates a documented precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Bracket-expression syntax error; `position()` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A brute-force oracle was asked for a weight above its height cap.
class OracleScaleExceeded : public Error {
 public:
  using Error::Error;
};

/// The Peterson recurrence has a zero leading coefficient at a non-simple weight.
class RecurrenceSingular : public Error {
 public:
  using Error::Error;
};

/// An invariant that can only fail through a bug in this library.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace kmroot
