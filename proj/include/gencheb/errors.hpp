#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gencheb {

/// Bad input from a caller: unknown symbol, malformed flag value, empty grid.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Polynomial text that does not conform to the grammar.
class ParseError : public UsageError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : UsageError(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Mathematically invalid request (negative power, mismatched units, division by zero).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Series whose constant term is not an invertible scalar.
class SingularSeriesError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An operation was asked to run outside its validity domain (e.g. det(M) != 1).
class PreconditionError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace gencheb
