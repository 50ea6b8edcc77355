#include <random>

#include "doctest.h"
#include "ffm/arith.hpp"
#include "ffm/errors.hpp"
#include "ffm/identities.hpp"
#include "ffm/monic_table.hpp"

using namespace ffm;

namespace {

const FieldSpec F5(5);
const FieldSpec F13(13);

Poly random_monic(FieldSpec f, int degree, std::mt19937_64& rng) {
  Poly::Coeffs c(static_cast<std::size_t>(degree) + 1);
  for (auto& v : c) v = static_cast<std::uint32_t>(rng() % f.q());
  c[degree] = 1;
  return Poly(f, std::move(c));
}

Poly random_prime(FieldSpec f, int degree, std::mt19937_64& rng) {
  while (true) {
    Poly p = random_monic(f, degree, rng);
    if (is_irreducible(p)) return p;
  }
}

// Number of monic h dividing f, by trying every monic h of degree <= deg f.
std::uint64_t brute_divisor_count(const Poly& f) {
  std::uint64_t d = 0;
  for (int k = 0; k <= f.degree(); ++k) {
    for (const Poly& h : enumerate_monic(f.field(), k)) d += (f % h).is_zero();
  }
  return d;
}

}  // namespace

TEST_CASE("is_irreducible examples") {
  CHECK(is_irreducible(Poly(F5, {0, 1})));
  CHECK_FALSE(is_irreducible(Poly(F5, {0, 0, 1})));
  // T^2 + 2: irreducible iff -2 = 3 is a non-square mod 5.
  CHECK(F5.legendre(3) == -1);
  CHECK(is_irreducible(Poly(F5, {2, 0, 1})));
  CHECK(is_irreducible_by_trial_division(Poly(F5, {2, 0, 1})));
  CHECK_THROWS_AS(is_irreducible(Poly::one(F5)), DomainError);
}

TEST_CASE("Rabin test agrees with trial division") {
  for (int n = 1; n <= 5; ++n) {
    for (const Poly& f : enumerate_monic(F5, n)) {
      REQUIRE(is_irreducible(f) == is_irreducible_by_trial_division(f));
    }
  }
  for (int n = 1; n <= 3; ++n) {
    for (const Poly& f : enumerate_monic(F13, n)) {
      REQUIRE(is_irreducible(f) == is_irreducible_by_trial_division(f));
    }
  }
  // Large q skips the root pre-check. Oracle for monic quadratics:
  // T^2 + bT + c is irreducible iff b^2 - 4c is a non-square.
  const FieldSpec big(65521);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    Poly f = random_monic(big, 2, rng);
    std::uint32_t disc = big.sub(big.mul(f.coeff(1), f.coeff(1)), big.mul(4, f.coeff(0)));
    CHECK(is_irreducible(f) == (big.legendre(disc) == -1));
  }
  // And a product of two random quadratics is never irreducible.
  for (int i = 0; i < 50; ++i) {
    CHECK_FALSE(is_irreducible(random_monic(big, 2, rng) * random_monic(big, 3, rng)));
  }
}

TEST_CASE("prime enumeration and counting") {
  CHECK(enumerate_primes(F5, 1).size() == 5);
  CHECK(enumerate_primes(F5, 2).size() == 10);  // (q^2 - q)/2
  CHECK(enumerate_primes(F5, 3).size() == 40);  // (q^3 - q)/3
  CHECK(count_primes(F5, 1) == 5);
  CHECK(count_primes(F13, 1) == 13);
  CHECK(count_primes(F5, 2) == 10);
  CHECK(count_primes(F5, 9) == 217000);  // (5^9 - 5^3)/9
  for (int n = 1; n <= 6; ++n) CHECK(count_primes(F5, n) == enumerate_primes(F5, n).size());
  for (int n = 1; n <= 4; ++n) CHECK(count_primes(F13, n) == enumerate_primes(F13, n).size());
  CHECK(mobius(1) == 1);
  CHECK(mobius(6) == 1);
  CHECK(mobius(12) == 0);
  CHECK(mobius(7) == -1);
}

TEST_CASE("prime polynomial theorem envelope") {
  for (FieldSpec f : {F5, F13}) {
    for (int n = 1; n <= 12; ++n) {
      BigInt qn = pow_big(f.q(), static_cast<unsigned>(n));
      BigInt diff = count_primes(f, n) * n - qn;
      CHECK(diff * diff <= 4 * qn);
    }
  }
}

TEST_CASE("factorize") {
  CHECK(factorize(Poly::one(F5)).factors.empty());
  Poly p(F5, {1, 1, 0, 1});
  REQUIRE(is_irreducible(p));
  auto fp = factorize(p);
  REQUIRE(fp.factors.size() == 1);
  CHECK(fp.factors[0].prime == p);
  CHECK(fp.factors[0].exponent == 1);

  auto sq = factorize(Poly(F5, {4, 4, 1}));  // (T + 2)^2
  REQUIRE(sq.factors.size() == 1);
  CHECK(sq.factors[0].prime == Poly(F5, {2, 1}));
  CHECK(sq.factors[0].exponent == 2);
  CHECK(sq.is_perfect_square());

  for (int n = 0; n <= 5; ++n) {
    for (const Poly& f : enumerate_monic(F5, n)) {
      auto fac = factorize(f);
      REQUIRE(fac.product(F5) == f);
      for (std::size_t i = 0; i < fac.factors.size(); ++i) {
        REQUIRE(is_irreducible(fac.factors[i].prime));
        for (std::size_t j = i + 1; j < fac.factors.size(); ++j) {
          REQUIRE_FALSE(fac.factors[i].prime == fac.factors[j].prime);
        }
      }
    }
  }
  CHECK_THROWS_AS(factorize(Poly(F5, {1, 2})), UsageError);
}

TEST_CASE("divisor_count") {
  CHECK(divisor_count(Poly::one(F5)) == 1);
  CHECK(divisor_count(Poly(F5, {1, 1, 0, 1})) == 2);

  BigInt total = 0;
  std::uint64_t brute = 0;
  for (const Poly& f : enumerate_monic(F5, 2)) {
    total += divisor_count(f);
    brute += brute_divisor_count(f);
  }
  CHECK(brute == 75);
  CHECK(total == 75);

  for (int n = 0; n <= 3; ++n) {
    for (const Poly& f : enumerate_monic(F5, n)) REQUIRE(divisor_count(f) == brute_divisor_count(f));
  }
}

TEST_CASE("divisor_square_sum") {
  CHECK(divisor_square_sum(F5, 0) == 1);
  CHECK(divisor_square_sum(F5, 1) == 15);
  for (int n = 0; n <= 3; ++n) {
    BigInt brute = 0;
    for (const Poly& f : enumerate_monic(F5, n)) brute += divisor_count(f * f);
    CHECK(divisor_square_sum(F5, n) == brute);
  }
  for (FieldSpec f : {F5, F13}) {
    MonicTable table(f, 6);
    for (int n = 0; n <= 6; ++n) {
      BigInt sieve = 0;
      for (std::uint64_t g = table.offset(n); g < table.offset(n + 1); ++g) sieve += table.divisor_count_of_square(g);
      CHECK(divisor_square_sum(f, n) == sieve);
    }
  }
}

TEST_CASE("monic table agrees with factorize") {
  MonicTable table(F5, 4);
  CHECK(table.size() == 1 + 5 + 25 + 125 + 625);
  CHECK(table.primes().size() == 5 + 10 + 40 + 150);
  for (std::uint64_t g = 0; g < table.size(); ++g) {
    Poly f = table.poly(g);
    REQUIRE(table.index_of(f) == g);
    auto a = factorize(f);
    auto b = table.factorization(g);
    REQUIRE(a.factors.size() == b.factors.size());
    for (std::size_t i = 0; i < a.factors.size(); ++i) {
      REQUIRE(a.factors[i].prime == b.factors[i].prime);
      REQUIRE(a.factors[i].exponent == b.factors[i].exponent);
    }
    REQUIRE(table.is_square(g) == a.is_perfect_square());
    REQUIRE(table.is_prime(g) == (f.degree() >= 1 && is_irreducible(f)));
  }
}

TEST_CASE("residue_symbol_euler") {
  Poly P(F5, {1, 1, 0, 1});
  CHECK(residue_symbol_euler(P, P) == 0);
  CHECK(residue_symbol_euler(Poly::one(F5), P) == 1);
  CHECK(residue_symbol_euler(Poly::constant(F5, 2), Poly(F5, {0, 1})) == -1);
  CHECK_THROWS_AS(residue_symbol_euler(Poly::one(F5), Poly(F5, {0, 0, 1})), DomainError);
}

TEST_CASE("residue_symbol") {
  std::mt19937_64 rng(6);
  Poly B(F5, {1, 1, 0, 1});
  CHECK(residue_symbol(B * Poly(F5, {3, 1}), B) == 0);
  CHECK(residue_symbol(Poly::zero(F5), B) == 0);
  CHECK(residue_symbol(B, Poly::one(F5)) == 1);

  SUBCASE("agrees with Euler criterion on 1000 random pairs") {
    for (int i = 0; i < 1000; ++i) {
      Poly P = random_prime(F5, 1 + static_cast<int>(rng() % 7), rng);
      Poly A = random_monic(F5, static_cast<int>(rng() % 10), rng);
      A = scale(A, 1 + static_cast<std::uint32_t>(rng() % 4));
      REQUIRE(residue_symbol(A, P) == residue_symbol_euler(A, P));
    }
  }
  SUBCASE("symmetric on coprime monic pairs") {
    for (FieldSpec f : {F5, F13}) {
      int tested = 0;
      while (tested < 300) {
        Poly a = random_monic(f, 1 + static_cast<int>(rng() % 7), rng);
        Poly b = random_monic(f, 1 + static_cast<int>(rng() % 7), rng);
        if (!gcd(a, b).is_one()) continue;
        REQUIRE(residue_symbol(a, b) == residue_symbol(b, a));
        ++tested;
      }
    }
  }
  SUBCASE("completely multiplicative in the top argument") {
    for (int i = 0; i < 300; ++i) {
      Poly b = random_monic(F13, 1 + static_cast<int>(rng() % 6), rng);
      Poly a1 = random_monic(F13, static_cast<int>(rng() % 6), rng);
      Poly a2 = scale(random_monic(F13, static_cast<int>(rng() % 6), rng), 1 + static_cast<std::uint32_t>(rng() % 12));
      REQUIRE(residue_symbol(a1 * a2, b) == residue_symbol(a1, b) * residue_symbol(a2, b));
    }
  }
  SUBCASE("multiplicative in the bottom argument") {
    for (int i = 0; i < 300; ++i) {
      Poly a = random_monic(F5, static_cast<int>(rng() % 6), rng);
      Poly b1 = random_monic(F5, 1 + static_cast<int>(rng() % 4), rng);
      Poly b2 = random_monic(F5, 1 + static_cast<int>(rng() % 4), rng);
      REQUIRE(residue_symbol(a, b1 * b2) == residue_symbol(a, b1) * residue_symbol(a, b2));
    }
  }
  SUBCASE("constant numerators") {
    Poly b(F5, {2, 0, 1});
    CHECK(residue_symbol(Poly::constant(F5, 2), b) == 1);  // legendre(2)^2
    CHECK(residue_symbol(Poly::constant(F5, 2), B) == -1);
  }
}

TEST_CASE("char_sum_over_primes") {
  SUBCASE("f = T, n = 1 against an Euler-criterion brute force") {
    Poly f(F5, {0, 1});
    std::int64_t brute = 0;
    for (std::uint32_t t = 0; t < 5; ++t) brute += residue_symbol_euler(f, Poly(F5, {t, 1}));
    auto s = char_sum_over_primes(f, 1);
    CHECK(s.sum == brute);
    CHECK(s.sum == 0);
    CHECK(s.prime_count == 5);
  }
  SUBCASE("square-free quadratic, n = 5") {
    Poly f(F5, {2, 0, 1});
    std::int64_t brute = 0;
    for (const Poly& P : enumerate_primes(F5, 5)) brute += residue_symbol_euler(f, P);
    auto s = char_sum_over_primes(f, 5);
    CHECK(s.prime_count == 624);
    CHECK(s.sum == brute);
    CHECK(std::isfinite(s.normalized));
    MESSAGE("measured constant for T^2+2, n=5: " << s.normalized);
  }
  SUBCASE("perfect squares are rejected and handled separately") {
    Poly sq(F5, {4, 4, 1});
    CHECK_THROWS_AS(char_sum_over_primes(sq, 3), DomainError);
    CHECK(char_sum_over_primes_square(sq, 3) == 40);
    CHECK(char_sum_over_primes_square(sq, 1) == 4);
    CHECK_THROWS_AS(char_sum_over_primes_square(Poly(F5, {0, 1}), 1), DomainError);
    CHECK_THROWS_AS(char_sum_over_primes(Poly::one(F5), 1), DomainError);
  }
}

TEST_CASE("identity suite passes at small scale") {
  IdentitySuiteOptions opts;
  opts.prime_max_degree = 4;
  opts.divisor_max_degree = 4;
  opts.symbol_pairs = 200;
  for (const auto& check : run_identity_suite(F5, opts)) {
    INFO(check.name << " n=" << check.degree << " " << check.detail);
    CHECK(check.passed);
  }
}
