#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ffm/bigint.hpp"
#include "ffm/poly.hpp"

namespace ffm {

struct PrimePower {
  Poly prime;
  int exponent;
};

/// Complete factorization of a monic polynomial into monic irreducibles.
/// Primes are distinct and ordered by (degree, enumeration index).
struct Factorization {
  std::vector<PrimePower> factors;

  Poly product(FieldSpec field) const;
  bool is_perfect_square() const noexcept;
  bool is_squarefree() const noexcept;
};

/// True iff f has no monic factor of degree in [1, deg f - 1].
/// Throws DomainError for constants.
bool is_irreducible(const Poly& f);

/// The slow reference: trial division by every monic polynomial of degree
/// <= deg f / 2. Only meant for small inputs in tests.
bool is_irreducible_by_trial_division(const Poly& f);

/// Monic irreducibles of degree n in enumeration order.
std::vector<Poly> enumerate_primes(FieldSpec field, int degree);

/// Exact count of monic irreducibles of degree n, (1/n) sum mu(d) q^(n/d).
BigInt count_primes(FieldSpec field, int degree);

int mobius(int n) noexcept;

/// Trial division by enumerated primes of degree <= deg f / 2.
Factorization factorize(const Poly& f);

/// d(f) = prod (e_i + 1).
BigInt divisor_count(const Poly& f);

/// Coefficient of u^n in (1 - q u^2)/(1 - q u)^3, which is sum over monic f
/// of degree n of d(f^2).
BigInt divisor_square_sum(FieldSpec field, int degree);

/// Quadratic residue symbol by Euler's criterion f^((|P|-1)/2) mod P.
/// Throws DomainError unless P is monic irreducible.
int residue_symbol_euler(const Poly& f, const Poly& P);

/// Jacobi-style symbol (A/B) for monic nonconstant B (B = 1 gives +1),
/// evaluated by repeated reduction and reciprocity. A may be any
/// polynomial, including constants, where (c/B) = legendre(c)^deg B.
/// Returns 0 when gcd(A, B) != 1.
int residue_symbol(const Poly& A, const Poly& B);

struct CharSumOverPrimes {
  std::int64_t sum = 0;
  std::uint64_t prime_count = 0;
  /// |sum| / ((deg f / n) q^(n/2))
  double normalized = 0.0;
};

/// S = sum over monic irreducible P of degree n of (f/P), for monic f of
/// positive degree that is not a perfect square. DomainError otherwise.
CharSumOverPrimes char_sum_over_primes(const Poly& f, int n);

/// The same sum when f is a perfect square: pi(n) minus the number of
/// degree-n primes dividing f.
BigInt char_sum_over_primes_square(const Poly& f, int n);

}  // namespace ffm
