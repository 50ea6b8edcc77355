#include "ffm/identities.hpp"

#include <random>

#include "ffm/arith.hpp"
#include "ffm/monic_table.hpp"

namespace ffm {

namespace {

Poly random_monic(FieldSpec field, int degree, std::mt19937_64& rng) {
  Poly::Coeffs c(static_cast<std::size_t>(degree) + 1);
  for (int i = 0; i < degree; ++i) c[i] = static_cast<std::uint32_t>(rng() % field.q());
  c[degree] = 1;
  return Poly(field, std::move(c));
}

Poly random_poly(FieldSpec field, int degree, std::mt19937_64& rng) {
  Poly::Coeffs c(static_cast<std::size_t>(degree) + 1);
  for (auto& v : c) v = static_cast<std::uint32_t>(rng() % field.q());
  return Poly(field, std::move(c));
}

Poly random_prime(FieldSpec field, int degree, std::mt19937_64& rng) {
  while (true) {
    Poly p = random_monic(field, degree, rng);
    if (irreducible_unchecked(p)) return p;
  }
}

}  // namespace

std::vector<IdentityCheck> run_identity_suite(FieldSpec field, const IdentitySuiteOptions& opts) {
  std::vector<IdentityCheck> out;
  const std::uint32_t q = field.q();

  for (int n = 1; n <= opts.prime_max_degree; ++n) {
    const BigInt formula = count_primes(field, n);
    const auto enumerated = enumerate_primes(field, n).size();
    out.push_back({"prime count formula = enumeration", n, formula == enumerated,
                   to_decimal(formula) + " vs " + std::to_string(enumerated)});
    // |pi - q^n/n| <= 2 q^(n/2)/n  <=>  (n pi - q^n)^2 <= 4 q^n
    const BigInt qn = pow_big(q, static_cast<unsigned>(n));
    const BigInt diff = formula * n - qn;
    out.push_back({"prime polynomial theorem envelope", n, diff * diff <= 4 * qn,
                   "n*pi - q^n = " + to_decimal(diff)});
  }

  if (opts.divisor_max_degree >= 0) {
    MonicTable table(field, opts.divisor_max_degree);
    for (int n = 0; n <= opts.divisor_max_degree; ++n) {
      BigInt sum_d = 0;
      BigInt sum_d2 = 0;
      for (std::uint64_t g = table.offset(n); g < table.offset(n + 1); ++g) {
        sum_d += table.divisor_count(g);
        sum_d2 += table.divisor_count_of_square(g);
      }
      const BigInt qn = pow_big(q, static_cast<unsigned>(n));
      out.push_back({"sum d(f) = (n+1) q^n", n, sum_d == qn * (n + 1), to_decimal(sum_d)});
      const BigInt closed = divisor_square_sum(field, n);
      out.push_back({"sum d(f^2) closed form = sieve", n, closed == sum_d2,
                     to_decimal(closed) + " vs " + to_decimal(sum_d2)});
      if (n >= 1) {
        // |D2 - (1/2)(1 - 1/q) q^n n^2| <= 3 q^n n, scaled by 2q.
        BigInt dev = 2 * BigInt(q) * closed - BigInt(q - 1) * qn * n * n;
        if (dev < 0) dev = -dev;
        out.push_back({"sum d(f^2) asymptotic envelope", n, dev <= 6 * BigInt(q) * qn * n, ""});
      }
    }

    bool all_ok = true;
    int max_checked = -1;
    for (int n = 0; n <= opts.divisor_max_degree; ++n) {
      if (monic_count(field, n) > opts.factor_budget) break;
      max_checked = n;
      for (const Poly& f : enumerate_monic(field, n)) {
        Factorization fac = factorize(f);
        if (!(fac.product(field) == f)) all_ok = false;
        for (const auto& pp : fac.factors) {
          if (!irreducible_unchecked(pp.prime)) all_ok = false;
        }
        const auto from_table = table.factorization(table.index_of(f));
        if (from_table.factors.size() != fac.factors.size()) {
          all_ok = false;
          continue;
        }
        for (std::size_t i = 0; i < fac.factors.size(); ++i) {
          if (!(from_table.factors[i].prime == fac.factors[i].prime) ||
              from_table.factors[i].exponent != fac.factors[i].exponent) {
            all_ok = false;
          }
        }
      }
    }
    out.push_back({"factorize reconstructs input (exhaustive)", max_checked, all_ok,
                   "degrees 0.." + std::to_string(max_checked)});
  }

  std::mt19937_64 rng(opts.seed);
  std::size_t agree = 0, symmetric = 0, coprime_pairs = 0, multiplicative = 0;
  for (std::size_t i = 0; i < opts.symbol_pairs; ++i) {
    const int dp = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(opts.symbol_max_prime_degree));
    const Poly P = random_prime(field, dp, rng);
    const Poly A = random_poly(field, static_cast<int>(rng() % 10), rng);
    if (residue_symbol(A, P) == residue_symbol_euler(A, P)) ++agree;

    const Poly a = random_monic(field, 1 + static_cast<int>(rng() % 8), rng);
    const Poly b = random_monic(field, 1 + static_cast<int>(rng() % 8), rng);
    if (gcd(a, b).is_one()) {
      ++coprime_pairs;
      if (residue_symbol(a, b) == residue_symbol(b, a)) ++symmetric;
    }
    const Poly a2 = random_poly(field, static_cast<int>(rng() % 8), rng);
    if (residue_symbol(a * a2, b) == residue_symbol(a, b) * residue_symbol(a2, b)) ++multiplicative;
  }
  out.push_back({"residue_symbol = Euler criterion", -1, agree == opts.symbol_pairs,
                 std::to_string(agree) + "/" + std::to_string(opts.symbol_pairs)});
  out.push_back({"reciprocity symmetry (A/B) = (B/A)", -1, symmetric == coprime_pairs,
                 std::to_string(symmetric) + "/" + std::to_string(coprime_pairs) + " coprime pairs"});
  out.push_back({"multiplicativity in the top argument", -1, multiplicative == opts.symbol_pairs,
                 std::to_string(multiplicative) + "/" + std::to_string(opts.symbol_pairs)});
  return out;
}

}  // namespace ffm
