#pragma once

#include <stdexcept>
#include <string>

namespace polybern {

/// Base of every error raised by the library.
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public MathError {
 public:
  DivisionByZero() : MathError("division by zero") {}
};

/// Raised by polynomial evaluation when a point leaves a symbol unbound.
class UnboundIndeterminate : public MathError {
 public:
  explicit UnboundIndeterminate(std::string symbol)
      : MathError("unbound indeterminate " + symbol), symbol_(std::move(symbol)) {}
  const std::string& symbol() const noexcept { return symbol_; }

 private:
  std::string symbol_;
};

class SeriesError : public MathError {
 public:
  using MathError::MathError;
};

class ParseError : public MathError {
 public:
  using MathError::MathError;
};

}  // namespace polybern
