#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ratinf {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (formula, base file, chain literal).
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset(offset) {}
  std::size_t offset;
};

/// A scale guard was hit (exhaustive enumeration requested above the cap).
struct LimitError : Error {
  using Error::Error;
};

/// A value violates a structural invariant (bad chain, bad ordering, bad base).
struct ValidationError : Error {
  using Error::Error;
};

/// Raised when a rank is requested for a pair that is not a consequence.
struct NotAConsequenceError : Error {
  using Error::Error;
};

/// Raised when a relation does not induce a total preorder; carries a witness pair
/// of class masks for which neither direction of the candidate order holds.
struct PreorderError : Error {
  PreorderError(const std::string& what, unsigned long a, unsigned long b)
      : Error(what), witness_a(a), witness_b(b) {}
  unsigned long witness_a;
  unsigned long witness_b;
};

}  // namespace ratinf
