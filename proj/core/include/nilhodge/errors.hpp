#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nilhodge {

/// The lower central series stabilised at a nonzero subspace.
class NonNilpotentError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A bigrading is not additive on brackets (or has the wrong size).
class IncompatibleBigradingError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class IncompatibleGradingError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class UnknownNameError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed algebra file. Line and column are 1-based; 0 when unknown.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what), line_(line), column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed file whose content violates an axiom or invariant.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace nilhodge
