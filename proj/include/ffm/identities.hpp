#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ffm/field.hpp"

namespace ffm {

struct IdentityCheck {
  std::string name;
  int degree = -1;  // -1 when the check is not per-degree
  bool passed = false;
  std::string detail;
};

struct IdentitySuiteOptions {
  int prime_max_degree = 6;
  int divisor_max_degree = 6;
  // Exhaustive factorization is limited to degrees with at most this many
  // monic polynomials.
  std::uint64_t factor_budget = 4000;
  std::size_t symbol_pairs = 1000;
  int symbol_max_prime_degree = 7;
  std::uint64_t seed = 0;
};

/// Runs every exact identity of the arithmetic layer: prime counts against
/// enumeration, the prime polynomial theorem envelope, divisor sums against
/// their closed forms, residue symbol agreement, reciprocity symmetry,
/// multiplicativity, and factorization round trips.
std::vector<IdentityCheck> run_identity_suite(FieldSpec field, const IdentitySuiteOptions& opts);

}  // namespace ffm
