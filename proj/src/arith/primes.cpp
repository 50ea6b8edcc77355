#include <string>

#include "ffm/arith.hpp"
#include "ffm/errors.hpp"

namespace ffm {

int mobius(int n) noexcept {
  if (n < 1) return 0;
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) {
    throw DomainError("irreducibility of a constant is undefined (units are neither prime nor composite)");
  }
  return irreducible_unchecked(make_monic(f));
}

bool is_irreducible_by_trial_division(const Poly& f) {
  if (f.degree() < 1) throw DomainError("irreducibility of a constant is undefined");
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    for (const Poly& h : enumerate_monic(f.field(), d)) {
      if ((f % h).is_zero()) return false;
    }
  }
  return true;
}

std::vector<Poly> enumerate_primes(FieldSpec field, int degree) {
  if (degree < 1) throw UsageError("enumerate_primes: degree must be >= 1");
  std::vector<Poly> out;
  for (const Poly& f : enumerate_monic(field, degree)) {
    if (irreducible_unchecked(f)) out.push_back(f);
  }
  return out;
}

BigInt count_primes(FieldSpec field, int degree) {
  if (degree < 1) throw UsageError("count_primes: degree must be >= 1");
  BigInt total = 0;
  for (int d = 1; d <= degree; ++d) {
    if (degree % d) continue;
    int mu = mobius(d);
    if (mu == 0) continue;
    BigInt term = pow_big(field.q(), static_cast<unsigned>(degree / d));
    total += mu > 0 ? term : BigInt(-term);
  }
  if (total % degree != 0) throw ConsistencyError("necklace sum not divisible by n");
  return total / degree;
}

}  // namespace ffm
