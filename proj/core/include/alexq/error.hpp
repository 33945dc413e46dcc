#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace alexq {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arguments violate an operation's precondition (shape mismatch, non-unit, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed the configured candidate budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// Malformed textual input. Line and column are 1-based; 0 means "not applicable".
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) return what;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

// A computed object failed a self-check that theory guarantees.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace alexq
