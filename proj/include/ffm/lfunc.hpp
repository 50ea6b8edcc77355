#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

#include "ffm/bigint.hpp"
#include "ffm/ext_field.hpp"
#include "ffm/monic_table.hpp"
#include "ffm/poly.hpp"

namespace ffm {

/// L(u, chi_P) = sum a_n u^n, u = q^(-s), for a monic irreducible P of odd
/// degree 2g+1. The polynomial has degree exactly 2g, a_0 = 1 and
/// a_n = q^(n-g) a_(2g-n).
struct LPolynomial {
  Poly modulus;
  int genus = 0;
  std::vector<BigInt> coeffs;  // a_0 .. a_2g

  const FieldSpec& field() const noexcept { return modulus.field(); }
};

/// L(1/2, chi_P) = (x + y sqrt(q)) / q^g. Because sqrt(q) is irrational the
/// pair is unique, so equality of central values is equality of pairs.
struct CentralValue {
  BigInt x;
  BigInt y;
  int genus = 0;
  std::uint32_t q = 0;

  double approx() const;
  bool is_zero() const noexcept { return x == 0 && y == 0; }
  friend bool operator==(const CentralValue&, const CentralValue&) = default;
};

/// Three-way comparison of the real numbers two central values denote.
int compare(const CentralValue& a, const CentralValue& b);

/// Genus g of the curve y^2 = P(T). Throws DomainError unless P is monic
/// irreducible of odd degree.
int genus_of(const Poly& P);

/// a_n as character sums sum_{deg f = n} chi_P(f), chi_P(f) = (P/f) by the
/// reciprocity-based symbol. By default only n <= g are enumerated and the
/// rest come from the functional equation; full_enumeration sums every
/// degree up to 2g (cost q^(2g)) so the functional equation can be checked.
LPolynomial lpoly_direct(const Poly& P, bool full_enumeration = false);

bool satisfies_functional_equation(const LPolynomial& L);

CentralValue central_value(const LPolynomial& L);

/// Production evaluator for L(1/2, chi_P) from the half sums
///   sum_{n<=g} sum_{deg f=n} chi_P(f) q^(-n/2) + sum_{m<=g-1} sum_{deg f=m} chi_P(f) q^(-m/2).
///
/// Built once per (q, g) and then shared by all workers: it holds the monic
/// table up to degree g and a quadratic residue table for every prime of
/// degree <= g, so chi_P on a prime p is one reduction P mod p plus a
/// lookup and chi_P on composites follows by multiplicativity.
class HalfSumEvaluator {
 public:
  HalfSumEvaluator(FieldSpec field, int genus);

  struct Result {
    CentralValue value;
    // First half sum alone (n <= g), same scaling as value.
    std::int64_t first_x = 0;
    std::int64_t first_y = 0;
    // Perfect-square f in both half sums, scaled by q^g.
    std::int64_t square_scaled = 0;
    std::int64_t first_square_scaled = 0;
    // Perfect-square f in the divisor-weighted exact representation of
    // L(1/2)^2, scaled by q^(2g).
    std::int64_t second_square_scaled = 0;
  };

  /// P must be monic irreducible of degree 2g+1; only the degree is checked.
  Result evaluate(const Poly& P) const;

  /// a_0..a_g, the character sums over each degree.
  std::vector<std::int64_t> character_sums(const Poly& P) const;

  int genus() const noexcept { return genus_; }
  const FieldSpec& field() const noexcept { return field_; }

 private:
  void fill_characters(const Poly& P, std::vector<std::int8_t>& chi) const;

  FieldSpec field_;
  int genus_;
  MonicTable table_;
  std::vector<std::int64_t> q_pow_;
  std::vector<Poly> prime_polys_;
  // residue_offset_[i] is where the residue table of primes()[i] starts in
  // residues_, or -1 when symbols for that prime go through residue_symbol.
  std::vector<std::int64_t> residue_offset_;
  std::vector<std::int8_t> residues_;
  std::vector<std::uint8_t> square_;
  std::vector<std::uint32_t> d_square_;
};

CentralValue halfsum_value(const Poly& P);

/// Both sides of the exact representation
///   L(1/2)^2 = sum_{deg f<=2g} chi_P(f) d(f)/|f|^(1/2) + sum_{deg f<=2g-1} chi_P(f) d(f)/|f|^(1/2)
/// in the form (a + b sqrt(q)) / q^(2g).
struct SecondMomentIdentity {
  int genus = 0;
  BigInt divisor_sum_a, divisor_sum_b;  // right-hand side by enumeration
  BigInt square_a, square_b;            // halfsum_value(P)^2
  BigInt square_part;                   // perfect-square f of the divisor sums
  BigInt square_part_closed_form;       // from divisor_square_sum

  bool holds() const {
    return divisor_sum_a == square_a && divisor_sum_b == square_b && square_part == square_part_closed_form;
  }
};

/// Cost q^(2g); meant for sampled primes.
SecondMomentIdentity second_moment_identity(const Poly& P);

/// N_1..N_m, projective points of y^2 = P(T) over F_(q^n); the single point
/// at infinity is included since deg P is odd.
struct PointCounts {
  Poly curve;
  std::vector<BigInt> counts;
};

/// Point counter for a fixed (q, m) that reuses its extension fields
/// across curves. Fields with at most 2^22 elements get discrete log
/// tables; in a cyclic group the squares are exactly the even powers of a
/// generator, so the quadratic character is the parity of the log.
class PointCounter {
 public:
  PointCounter(FieldSpec field, int max_extension_degree);
  ~PointCounter();
  PointCounter(PointCounter&&) noexcept;
  PointCounter& operator=(PointCounter&&) noexcept;

  PointCounts count(const Poly& P) const;
  /// Character of the extension of degree n, from the log table when one
  /// exists (test hook to compare against the Euler criterion).
  int character(int n, std::uint64_t index) const;

 private:
  struct Level;
  FieldSpec field_;
  std::vector<std::unique_ptr<Level>> levels_;
};

PointCounts point_counts(const Poly& P, int max_extension_degree);

/// |N_n - q^n - 1| <= 2 g q^(n/2) for every n.
bool weil_bound_holds(const PointCounts& counts, int genus);

/// Newton identities on S_n = q^n + 1 - N_n give a_1..a_g in exact integer
/// arithmetic; the functional equation gives the rest. Needs N_1..N_g.
/// Throws ConsistencyError when a division is not exact.
LPolynomial lpoly_from_counts(const PointCounts& counts, int genus);

/// Inverse direction: N_1..N_m from the coefficients.
PointCounts counts_from_lpoly(const LPolynomial& L, int max_extension_degree);

struct RootReport {
  std::vector<std::complex<double>> roots;  // distinct roots in u
  std::vector<double> moduli;               // |u_j| * sqrt(q), ideally 1
  double max_deviation = 0.0;               // max | |u_j| sqrt(q) - 1 |
  int square_free_degree = 0;
  bool passed = false;
};

/// Roots of L(u) from the companion matrix of its square-free part, with
/// Newton polishing, checked against |u| = q^(-1/2) within relative
/// tolerance tol. Throws NumericalError on non-convergence.
RootReport rh_check(const LPolynomial& L, double tol);

}  // namespace ffm
