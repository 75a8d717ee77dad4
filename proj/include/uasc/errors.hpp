#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace uasc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a computation would exceed a configured capacity limit.
/// Blowups are doubly exponential in this domain; they must fail loudly.
class CapacityError : public Error {
 public:
  CapacityError(const std::string& what, std::size_t limit, std::size_t reached)
      : Error(what + " (limit " + std::to_string(limit) + ", reached " +
              std::to_string(reached) + ")"),
        limit_(limit),
        reached_(reached) {}

  std::size_t limit() const { return limit_; }
  std::size_t reached() const { return reached_; }

 private:
  std::size_t limit_;
  std::size_t reached_;
};

/// Syntax error with a 1-based position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error("parse error at " + std::to_string(line) + ":" +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace uasc
