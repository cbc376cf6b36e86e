#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mpoly {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands from different scalar contexts (radicands) were combined.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

/// Argument outside an operation's domain (bad composition, wrong length, q < 2, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A theorem's hypothesis (Hadamard, symmetric, core pattern) does not hold for the matrix.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, unsigned long long required)
      : Error(what), required_(required) {}

  unsigned long long required() const noexcept { return required_; }

 private:
  unsigned long long required_;
};

class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace mpoly
