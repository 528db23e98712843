#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chowtower {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial, divisor expression or tower text. Positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Integer arithmetic left the 64-bit range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A Picard class was used against a surface it does not belong to.
class SurfaceMismatchError : public Error {
 public:
  using Error::Error;
};

/// A basis name, embedded surface or stage symbol is not defined on a model.
class BasisError : public Error {
 public:
  using Error::Error;
};

/// A blow-up center that the engine cannot handle.
class CenterError : public Error {
 public:
  using Error::Error;
};

/// Mathematically undefined request: empty linear system, inexact division,
/// sign changes over the working range, no stabilization, etc.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace chowtower
