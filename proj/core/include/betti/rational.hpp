#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace betti {

// Arbitrary-precision integers and rationals; every computation in the
// library is exact.
using Int = mpz_class;
using Rat = mpq_class;

// Recoverable failure of a mathematical contract (input outside the
// algorithm's domain). The CLI reports these and exits with status 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Violated precondition or malformed parameter values.
class InvalidInput : public DomainError {
 public:
  using DomainError::DomainError;
};

Rat make_rat(long num, long den);

// Accepts "p" or "p/q" with q > 0; result is canonicalized.
Rat rat_from_string(const std::string& text);

// Lowest terms, "p" when the denominator is 1, otherwise "p/q".
std::string rat_to_string(const Rat& value);

bool is_integer(const Rat& value);

}  // namespace betti
