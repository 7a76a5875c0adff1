#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace primspec {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(message + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        message_(message),
        line_(line),
        column_(column) {}

  const std::string& message() const noexcept { return message_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

// An argument violates a precondition: unknown vertex, a set that is not
// hereditary, a tail of the wrong kind, and so on.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A pair (K, B) that does not index a gauge-invariant ideal.
class InadmissibleIdeal : public Error {
 public:
  using Error::Error;
};

// A structural fact guaranteed by the theory failed to hold.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace primspec
