#include <vector>

#include "ffm/poly.hpp"

namespace ffm {

namespace {

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool has_root(const Poly& f) {
  for (std::uint32_t x = 0; x < f.q(); ++x) {
    if (f(x) == 0) return true;
  }
  return false;
}

}  // namespace

// Rabin's test: f of degree n is irreducible iff T^(q^n) = T mod f and
// gcd(T^(q^(n/l)) - T, f) = 1 for every prime l | n. The q-power Frobenius
// is linear over F_q, so after building its matrix once each further power
// costs n^2 multiply-adds instead of a full powmod.
bool irreducible_unchecked(const Poly& f) {
  const int n = f.degree();
  if (n == 1) return true;
  const FieldSpec& field = f.field();
  const std::uint64_t q = field.q();
  if (q <= static_cast<std::uint64_t>(4 * n * n) && has_root(f)) return false;

  const Poly t = Poly::monomial(field, 1);
  const Poly x1 = powmod(t, q, f);

  // rows[j] = T^(j q) mod f, dense with n entries.
  std::vector<std::uint32_t> rows(static_cast<std::size_t>(n) * n, 0);
  Poly r = Poly::one(field);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i <= r.degree(); ++i) rows[j * n + i] = r.coeff(i);
    if (j + 1 < n) r = mulmod(r, x1, f);
  }

  std::vector<std::vector<std::uint32_t>> powers(n + 1);
  powers[1].assign(n, 0);
  for (int i = 0; i <= x1.degree(); ++i) powers[1][i] = x1.coeff(i);
  std::vector<std::uint64_t> acc(n);
  for (int k = 2; k <= n; ++k) {
    std::fill(acc.begin(), acc.end(), 0);
    const auto& prev = powers[k - 1];
    for (int j = 0; j < n; ++j) {
      const std::uint64_t c = prev[j];
      if (c == 0) continue;
      const std::uint32_t* row = &rows[j * n];
      for (int i = 0; i < n; ++i) acc[i] += c * row[i];
      if ((j & 0x3f) == 0x3f) {
        for (auto& v : acc) v %= q;
      }
    }
    powers[k].resize(n);
    for (int i = 0; i < n; ++i) powers[k][i] = static_cast<std::uint32_t>(acc[i] % q);
  }

  const auto& full = powers[n];
  for (int i = 0; i < n; ++i) {
    if (full[i] != (i == 1 ? 1u : 0u)) return false;
  }
  for (int l : prime_divisors(n)) {
    const auto& v = powers[n / l];
    Poly::Coeffs c(v.begin(), v.end());
    c[1] = field.sub(c[1], 1);
    if (!gcd(Poly(field, std::move(c)), f).is_one()) return false;
  }
  return true;
}

}  // namespace ffm
