#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace artin {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mismatched shapes or ambient spaces, division by zero.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Malformed ring presentation: non-homogeneous or linear relations, bad field.
class PresentationError : public Error {
 public:
  using Error::Error;
};

class NotArtinianError : public Error {
 public:
  using Error::Error;
};

/// A structural invariant was violated (action not closed, non-minimal differential, ...).
class InvariantError : public Error {
 public:
  using Error::Error;
};

class UndefinedInputError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
              what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace artin
