#include <cmath>
#include <string>

#include "ffm/arith.hpp"
#include "ffm/errors.hpp"

namespace ffm {

int residue_symbol_euler(const Poly& f, const Poly& P) {
  if (!(f.field() == P.field())) throw UsageError("residue_symbol_euler: operands over different fields");
  if (!P.is_monic() || P.degree() < 1 || !irreducible_unchecked(P)) {
    throw DomainError("residue_symbol_euler: modulus " + to_string(P) + " is not monic irreducible");
  }
  Poly r = f % P;
  if (r.is_zero()) return 0;
  const BigInt half = (pow_big(P.q(), static_cast<unsigned>(P.degree())) - 1) / 2;
  Poly e = powmod(r, half, P);
  if (e.is_one()) return 1;
  if (e.degree() == 0 && e.coeff(0) == P.q() - 1) return -1;
  throw ConsistencyError("Euler criterion gave neither 1 nor -1 modulo " + to_string(P));
}

int residue_symbol(const Poly& A, const Poly& B) {
  if (!(A.field() == B.field())) throw UsageError("residue_symbol: operands over different fields");
  if (!B.is_monic()) throw UsageError("residue_symbol: bottom argument must be monic");
  const FieldSpec& field = A.field();
  const std::uint32_t half_q_minus_1 = (field.q() - 1) / 2;
  Poly top = A;
  Poly bottom = B;
  int result = 1;
  while (bottom.degree() > 0) {
    top = top % bottom;
    if (top.is_zero()) return 0;
    const std::uint32_t c = top.lead();
    if (c != 1) {
      // (c/B) = legendre(c)^deg B, and (c f / B) = (c/B)(f/B).
      if (field.legendre(c) < 0 && (bottom.degree() % 2)) result = -result;
      top = make_monic(top);
    }
    if (top.degree() == 0) return result;
    // Reciprocity for monic coprime A, B:
    // (A/B) = (B/A) (-1)^(((q-1)/2) deg A deg B); the sign is +1 when q = 1 mod 4.
    if ((static_cast<std::uint64_t>(half_q_minus_1) * top.degree() * bottom.degree()) % 2) result = -result;
    std::swap(top, bottom);
  }
  return result;
}

CharSumOverPrimes char_sum_over_primes(const Poly& f, int n) {
  if (!f.is_monic() || f.degree() < 1) {
    throw DomainError("char_sum_over_primes: f must be monic of positive degree");
  }
  if (n < 1) throw UsageError("char_sum_over_primes: n must be >= 1");
  if (factorize(f).is_perfect_square()) {
    throw DomainError("char_sum_over_primes: f = " + to_string(f) +
                      " is a perfect square; use char_sum_over_primes_square");
  }
  CharSumOverPrimes out;
  for (const Poly& P : enumerate_primes(f.field(), n)) {
    out.sum += residue_symbol(f, P);
    ++out.prime_count;
  }
  const double scale = static_cast<double>(f.degree()) / n * std::pow(static_cast<double>(f.q()), n / 2.0);
  out.normalized = std::abs(static_cast<double>(out.sum)) / scale;
  return out;
}

BigInt char_sum_over_primes_square(const Poly& f, int n) {
  if (!f.is_monic()) throw DomainError("char_sum_over_primes_square: f must be monic");
  if (n < 1) throw UsageError("char_sum_over_primes_square: n must be >= 1");
  Factorization fac = factorize(f);
  if (!fac.is_perfect_square()) {
    throw DomainError("char_sum_over_primes_square: f = " + to_string(f) + " is not a perfect square");
  }
  BigInt s = count_primes(f.field(), n);
  for (const auto& pp : fac.factors) {
    if (pp.prime.degree() == n) s -= 1;
  }
  return s;
}

}  // namespace ffm
