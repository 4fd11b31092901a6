#pragma once

#include <stdexcept>
#include <string>

namespace gor {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidDegree : public Error {
 public:
  using Error::Error;
};

class InvalidHVector : public Error {
 public:
  using Error::Error;
};

class NotGorensteinCandidate : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class UndefinedGcd : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Inhomogeneous polynomial input; names both degrees.
class DegreeMismatch : public ParseError {
 public:
  DegreeMismatch(int expected, int found, int line, int column)
      : ParseError("degree mismatch: polynomial has degree " + std::to_string(expected) +
                       " but a term has degree " + std::to_string(found),
                   line, column),
        expected_(expected),
        found_(found) {}
  int expected() const { return expected_; }
  int found() const { return found_; }

 private:
  int expected_;
  int found_;
};

// Raised when an ideal is not certified artinian by the requested degree.
class Inconclusive : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class NotSiSequence : public Error {
 public:
  using Error::Error;
};

}  // namespace gor
