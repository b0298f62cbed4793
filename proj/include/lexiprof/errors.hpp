#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lexiprof {

/// Base of every error the library raises for bad data or bad input files.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input. `line` and `column` are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column = 0)
      : Error(format(message, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line, std::size_t column) {
    if (line == 0) return message;
    std::string where = "line " + std::to_string(line);
    if (column != 0) where += ", column " + std::to_string(column);
    return where + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class DuplicatePost : public Error {
 public:
  using Error::Error;
};

class UnknownValueCode : public Error {
 public:
  using Error::Error;
};

class ConflictingLabel : public Error {
 public:
  using Error::Error;
};

class DanglingMarker : public Error {
 public:
  using Error::Error;
};

class UnknownKind : public Error {
 public:
  using Error::Error;
};

class TooFewClasses : public Error {
 public:
  using Error::Error;
};

class InvalidAssignment : public Error {
 public:
  using Error::Error;
};

class TrainTestOverlap : public Error {
 public:
  using Error::Error;
};

}  // namespace lexiprof
