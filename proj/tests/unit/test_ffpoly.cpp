#include <random>
#include <set>

#include "doctest.h"
#include "ffm/errors.hpp"
#include "ffm/ext_field.hpp"
#include "ffm/poly.hpp"

using namespace ffm;

namespace {

const FieldSpec F5(5);
const FieldSpec F13(13);

Poly random_poly(FieldSpec f, int max_degree, std::mt19937_64& rng) {
  int d = static_cast<int>(rng() % static_cast<unsigned>(max_degree + 1));
  Poly::Coeffs c(static_cast<std::size_t>(d) + 1);
  for (auto& v : c) v = static_cast<std::uint32_t>(rng() % f.q());
  return Poly(f, std::move(c));
}

Poly random_monic(FieldSpec f, int degree, std::mt19937_64& rng) {
  Poly::Coeffs c(static_cast<std::size_t>(degree) + 1);
  for (auto& v : c) v = static_cast<std::uint32_t>(rng() % f.q());
  c[degree] = 1;
  return Poly(f, std::move(c));
}

}  // namespace

TEST_CASE("field spec validation") {
  CHECK_NOTHROW(FieldSpec(5));
  CHECK_NOTHROW(FieldSpec(13));
  CHECK_NOTHROW(FieldSpec(65521));
  CHECK_THROWS_AS(FieldSpec(7), InvalidField);
  CHECK_THROWS_AS(FieldSpec(9), InvalidField);
  CHECK_THROWS_AS(FieldSpec(3), InvalidField);
  CHECK_THROWS_AS(FieldSpec(65537), InvalidField);
  CHECK_THROWS_AS(FieldSpec(21), InvalidField);
}

TEST_CASE("prime field arithmetic") {
  CHECK(F5.mul(2, 3) == 1);
  CHECK(F5.inv(2) == 3);
  CHECK(F13.inv(5) * 5 % 13 == 1);
  CHECK_THROWS_AS(F5.inv(0), DomainError);
  CHECK(F5.legendre(0) == 0);
  CHECK(F5.legendre(4) == 1);
  CHECK(F5.legendre(2) == -1);
  CHECK(F5.legendre(5 - 1) == 1);  // -1 is a square when q = 1 mod 4
}

TEST_CASE("normalization and representation") {
  Poly p(F5, {1, 0, 2, 1, 0, 0});
  CHECK(p.degree() == 3);
  CHECK(p.is_monic());
  CHECK(Poly(F5, {0, 0}).is_zero());
  CHECK(Poly::zero(F5).degree() == -1);
  CHECK_FALSE(Poly::zero(F5).is_monic());
  CHECK(Poly(F5, {-1}).coeff(0) == 4);
}

TEST_CASE("text encoding") {
  Poly p = parse_poly(F5, "1,0,2,1", true);
  CHECK(p == Poly(F5, {1, 0, 2, 1}));
  CHECK(to_string(p) == "1,0,2,1");
  CHECK(to_string(Poly::zero(F5)) == "0");
  CHECK(parse_poly(F5, "0", false).is_zero());
  CHECK_THROWS_AS(parse_poly(F5, "1,0,2", true), UsageError);
  CHECK_NOTHROW(parse_poly(F5, "1,0,2", false));
  CHECK_THROWS_AS(parse_poly(F5, "1,,1", false), UsageError);
  CHECK_THROWS_AS(parse_poly(F5, "1,7", false), UsageError);
  CHECK_THROWS_AS(parse_poly(F5, "1,x", false), UsageError);
  CHECK_THROWS_AS(parse_poly(F5, "", false), UsageError);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    Poly r = random_poly(F13, 9, rng);
    CHECK(parse_poly(F13, to_string(r), false) == r);
  }
}

TEST_CASE("mulmod") {
  const Poly m(F5, {1, 0, 1});  // T^2 + 1
  const Poly t = Poly::monomial(F5, 1);
  SUBCASE("identity") {
    Poly b(F5, {3, 2});
    CHECK(mulmod(Poly::one(F5), b, m) == b);
  }
  SUBCASE("T*T = -1 mod T^2+1 over F_5") { CHECK(mulmod(t, t, m) == Poly::constant(F5, 4)); }
  SUBCASE("commutativity") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 100; ++i) {
      Poly mm = random_monic(F13, 1 + static_cast<int>(rng() % 8), rng);
      Poly a = random_poly(F13, mm.degree() - 1, rng);
      Poly b = random_poly(F13, mm.degree() - 1, rng);
      Poly ab = mulmod(a, b, mm);
      CHECK(ab == mulmod(b, a, mm));
      CHECK(ab.degree() < mm.degree());
    }
  }
  SUBCASE("field mismatch") {
    CHECK_THROWS_AS(mulmod(Poly::one(F13), Poly::one(F5), m), UsageError);
    CHECK_THROWS_AS(Poly::one(F13) + Poly::one(F5), UsageError);
  }
}

TEST_CASE("powmod") {
  const Poly t = Poly::monomial(F5, 1);
  CHECK(powmod(Poly::constant(F5, 2), BigInt(2), t) == Poly::constant(F5, 4) % t);
  CHECK(powmod(Poly::constant(F5, 2), BigInt(2), Poly(F5, {0, 0, 1})) == Poly::constant(F5, 4));

  std::mt19937_64 rng(2);
  const Poly m(F5, {1, 1, 0, 1});  // T^3 + T + 1
  for (int i = 0; i < 20; ++i) {
    Poly a = random_poly(F5, 2, rng);
    CHECK(powmod(a, BigInt(1), m) == a);
    CHECK(powmod(a, BigInt(0), m) == Poly::one(F5));
    CHECK(powmod(a, std::uint64_t{17}, m) == powmod(a, BigInt(17), m));
  }

  // Frobenius: a^(q^d) = a in F_q[T]/(m) for irreducible m of degree d.
  // Oracle: plain repeated multiplication, q^d - 1 times.
  for (const Poly& mod : {Poly(F5, {2, 1}), Poly(F5, {2, 0, 1}), Poly(F5, {1, 1, 0, 1})}) {
    REQUIRE(irreducible_unchecked(mod));
    std::uint64_t full = monic_count(F5, mod.degree());
    for (int i = 0; i < 5; ++i) {
      Poly a = random_poly(F5, mod.degree() - 1, rng);
      Poly acc = a;
      for (std::uint64_t k = 1; k < full; ++k) acc = mulmod(acc, a, mod);
      CHECK(acc == a);
      CHECK(powmod(a, BigInt(full), mod) == a);
    }
  }
}

TEST_CASE("divrem and gcd properties") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    Poly a = random_poly(F13, 12, rng);
    Poly b = random_poly(F13, 6, rng);
    if (b.is_zero()) continue;
    auto [quo, rem] = divrem(a, b);
    CHECK(quo * b + rem == a);
    CHECK(rem.degree() < b.degree());

    Poly g = gcd(a, b);
    CHECK(g.is_monic());
    CHECK((a % g).is_zero());
    CHECK((b % g).is_zero());
  }
  CHECK_THROWS_AS(divrem(Poly::one(F5), Poly::zero(F5)), DomainError);
  CHECK(gcd(Poly::zero(F5), Poly::zero(F5)).is_zero());
}

TEST_CASE("enumerate_monic order and counts") {
  SUBCASE("degree 0") {
    std::vector<Poly> all(enumerate_monic(F5, 0).begin(), enumerate_monic(F5, 0).end());
    REQUIRE(all.size() == 1);
    CHECK(all[0].is_one());
  }
  SUBCASE("degree 1 order") {
    std::vector<std::string> seen;
    for (const Poly& f : enumerate_monic(F5, 1)) seen.push_back(to_string(f));
    CHECK(seen == std::vector<std::string>{"0,1", "1,1", "2,1", "3,1", "4,1"});
  }
  SUBCASE("coefficient 0 varies fastest") {
    auto it = enumerate_monic(F5, 2).begin();
    for (int i = 0; i < 5; ++i) ++it;
    CHECK(*it == Poly(F5, {0, 1, 1}));
  }
  CHECK(enumerate_monic(F5, 3).size() == 125);

  // Distinct and exactly q^n: the i-th element has enumeration index i.
  for (FieldSpec f : {F5, F13}) {
    for (int n = 0; n <= 6; ++n) {
      std::uint64_t i = 0;
      bool ok = true;
      for (const Poly& p : enumerate_monic(f, n)) {
        ok = ok && p.is_monic() && p.degree() == n && monic_index(p) == i;
        ++i;
      }
      CHECK(ok);
      CHECK(i == monic_count(f, n));
    }
  }
  CHECK(monic_from_index(F5, 3, 57) == *std::next(enumerate_monic(F5, 3).begin(), 57));
}

TEST_CASE("extension field quadratic character") {
  ExtField f1(F5, 1);
  CHECK(f1.quadratic_character(f1.zero()) == 0);
  CHECK(f1.quadratic_character(f1.one()) == 1);
  CHECK(f1.quadratic_character(f1.embed(2)) == -1);

  ExtField f2(F5, 2);
  CHECK(f2.modulus() == Poly(F5, {2, 0, 1}));  // first irreducible quadratic: T^2 + 2
  // Every element of F_q is a square in F_{q^2}.
  for (std::uint32_t c = 1; c < 5; ++c) CHECK(f2.quadratic_character(f2.embed(c)) == 1);

  CHECK_THROWS_AS(ExtField(Poly(F5, {0, 0, 1})), DomainError);
}

TEST_CASE("extension field multiplicative group order") {
  std::mt19937_64 rng(4);
  for (FieldSpec base : {F5, F13}) {
    for (int n = 1; n <= 4; ++n) {
      ExtField f(base, n);
      const BigInt group = f.order() - 1;
      for (int i = 0; i < 100; ++i) {
        Poly a = f.element(rng() % static_cast<std::uint64_t>(f.order()));
        if (a.is_zero()) continue;
        CHECK(f.pow(a, group).is_one());
      }
    }
  }
}

TEST_CASE("character table agrees with Euler criterion") {
  for (int n = 1; n <= 3; ++n) {
    ExtField f(F5, n);
    QuadraticCharacterTable table(f);
    int squares = 0;
    for (std::uint64_t i = 0; i < table.size(); ++i) {
      CHECK(table[i] == f.quadratic_character(f.element(i)));
      squares += table[i] == 1;
    }
    CHECK(squares == static_cast<int>((table.size() - 1) / 2));
  }
}
