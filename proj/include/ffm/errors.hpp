#pragma once

#include <stdexcept>
#include <string>

namespace ffm {

// Caller handed in something the operation does not accept (bad flag value,
// operands over different fields). Maps to exit status 2 in the CLI.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The input is well formed but outside the mathematical domain of the
// operation (constant passed to an irreducibility test, reducible modulus).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A root finder or other floating-point routine did not converge.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exact identity that must hold did not: a bug or corrupted input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ffm
