#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tropkap {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shape precondition violated: non-square input, mismatched sizes,
/// index out of range, or a size above the enumeration threshold.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Raised by the text parsers. `position()` is a byte offset into the
/// parsed text; line and column are 1-based and 0 when not applicable.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position,
             std::size_t line = 0, std::size_t column = 0)
      : Error(message), position_(position), line_(line), column_(column) {}

  std::size_t position() const noexcept { return position_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t position_;
  std::size_t line_;
  std::size_t column_;
};

/// A series matrix was expected to lift a given tropical matrix but does not.
class NotALiftError : public Error {
 public:
  using Error::Error;
};

/// The valuation trichotomy for the rank-5 certificate did not hold.
class CertificateError : public Error {
 public:
  using Error::Error;
};

}  // namespace tropkap
