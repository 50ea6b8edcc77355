#include "ffm/lfunc.hpp"

#include "ffm/arith.hpp"
#include "ffm/errors.hpp"

namespace ffm {

int genus_of(const Poly& P) {
  if (!P.is_monic() || P.degree() < 1) {
    throw DomainError("L-function modulus must be monic of positive degree, got " + to_string(P));
  }
  if (P.degree() % 2 == 0) {
    throw DomainError("L-function modulus must have odd degree, got degree " + std::to_string(P.degree()));
  }
  if (!is_irreducible(P)) {
    throw DomainError("L-function modulus must be irreducible: " + to_string(P));
  }
  return (P.degree() - 1) / 2;
}

LPolynomial lpoly_direct(const Poly& P, bool full_enumeration) {
  const int g = genus_of(P);
  const std::uint32_t q = P.q();
  LPolynomial L{P, g, std::vector<BigInt>(2 * g + 1)};
  const int top = full_enumeration ? 2 * g : g;
  for (int n = 0; n <= top; ++n) {
    std::int64_t s = 0;
    for (const Poly& f : enumerate_monic(P.field(), n)) s += residue_symbol(P, f);
    L.coeffs[n] = s;
  }
  if (!full_enumeration) {
    for (int n = g + 1; n <= 2 * g; ++n) L.coeffs[n] = pow_big(q, n - g) * L.coeffs[2 * g - n];
  }
  return L;
}

bool satisfies_functional_equation(const LPolynomial& L) {
  const int g = L.genus;
  if (static_cast<int>(L.coeffs.size()) != 2 * g + 1 || L.coeffs[0] != 1) return false;
  for (int n = g + 1; n <= 2 * g; ++n) {
    if (L.coeffs[n] != pow_big(L.field().q(), n - g) * L.coeffs[2 * g - n]) return false;
  }
  return true;
}

}  // namespace ffm
