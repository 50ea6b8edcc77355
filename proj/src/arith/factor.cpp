#include "ffm/arith.hpp"
#include "ffm/errors.hpp"

namespace ffm {

Poly Factorization::product(FieldSpec field) const {
  Poly acc = Poly::one(field);
  for (const auto& pp : factors) {
    for (int i = 0; i < pp.exponent; ++i) acc = acc * pp.prime;
  }
  return acc;
}

bool Factorization::is_perfect_square() const noexcept {
  for (const auto& pp : factors) {
    if (pp.exponent % 2) return false;
  }
  return true;
}

bool Factorization::is_squarefree() const noexcept {
  for (const auto& pp : factors) {
    if (pp.exponent > 1) return false;
  }
  return true;
}

// Once every factor of degree < d has been divided out, any monic divisor
// of degree d is irreducible, so walking all monic h in enumeration order
// yields exactly the prime factors, smallest first.
Factorization factorize(const Poly& f) {
  if (!f.is_monic()) throw UsageError("factorize expects a monic polynomial");
  Factorization out;
  Poly rest = f;
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    for (const Poly& h : enumerate_monic(f.field(), d)) {
      if (2 * d > rest.degree()) break;
      int e = 0;
      while (true) {
        auto [quo, rem] = divrem(rest, h);
        if (!rem.is_zero()) break;
        rest = std::move(quo);
        ++e;
      }
      if (e) out.factors.push_back({h, e});
    }
  }
  // Whatever is left has no factor of degree <= half its own: it is prime.
  if (rest.degree() >= 1) out.factors.push_back({rest, 1});
  return out;
}

BigInt divisor_count(const Poly& f) {
  BigInt d = 1;
  for (const auto& pp : factorize(f).factors) d *= pp.exponent + 1;
  return d;
}

BigInt divisor_square_sum(FieldSpec field, int degree) {
  if (degree < 0) throw UsageError("divisor_square_sum: negative degree");
  const unsigned n = static_cast<unsigned>(degree);
  const BigInt qn = pow_big(field.q(), n);
  BigInt value = qn * ((n + 1) * (n + 2) / 2);
  if (n >= 2) value -= pow_big(field.q(), n - 1) * (n * (n - 1) / 2);
  return value;
}

}  // namespace ffm
