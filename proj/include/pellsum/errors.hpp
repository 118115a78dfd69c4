#pragma once

#include <stdexcept>
#include <string>

namespace pellsum {

// Base of every exception thrown by the core. The C API maps each subclass
// to a status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
  using Error::Error;
};

// Bad user input (unparsable rational, R = 0, negative index where not allowed).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A closed form needs a denominator that vanishes for this R.
class DegenerateDenominator : public Error {
 public:
  using Error::Error;
};

// The W-free part of lambda^n - mu^n was nonzero. Never valid input; a bug.
class BinetInconsistency : public Error {
 public:
  using Error::Error;
};

class SymbolicBoundExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace pellsum
