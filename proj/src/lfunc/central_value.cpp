#include "ffm/lfunc.hpp"

#include "ffm/arith.hpp"
#include "ffm/errors.hpp"

namespace ffm {

double CentralValue::approx() const { return surd_to_double(x, y, q, pow_big(q, genus)); }

int compare(const CentralValue& a, const CentralValue& b) {
  if (a.q != b.q) throw UsageError("cannot compare central values over different fields");
  const BigInt sa = pow_big(a.q, b.genus);
  const BigInt sb = pow_big(a.q, a.genus);
  return surd_sign(a.x * sa - b.x * sb, a.y * sa - b.y * sb, a.q);
}

// sum_n a_n q^(-n/2) scaled by q^g: even n lands in the rational part with
// weight q^(g - n/2), odd n in the sqrt(q) part with weight q^(g - (n+1)/2).
CentralValue central_value(const LPolynomial& L) {
  const std::uint32_t q = L.field().q();
  const int g = L.genus;
  CentralValue v{0, 0, g, q};
  for (int n = 0; n <= 2 * g; ++n) {
    if (n % 2 == 0) {
      v.x += L.coeffs[n] * pow_big(q, g - n / 2);
    } else {
      v.y += L.coeffs[n] * pow_big(q, g - (n + 1) / 2);
    }
  }
  return v;
}

CentralValue halfsum_value(const Poly& P) {
  const int g = genus_of(P);
  return HalfSumEvaluator(P.field(), g).evaluate(P).value;
}

SecondMomentIdentity second_moment_identity(const Poly& P) {
  const int g = genus_of(P);
  const std::uint32_t q = P.q();
  const MonicTable table(P.field(), 2 * g);

  SecondMomentIdentity r;
  r.genus = g;
  // Each f of degree n <= 2g-1 appears in both sums, degree 2g only in the first.
  for (int n = 0; n <= 2 * g; ++n) {
    const int copies = n <= 2 * g - 1 ? 2 : 1;
    BigInt b_n = 0;
    BigInt sq_n = 0;
    const std::uint64_t base = table.offset(n);
    std::uint64_t i = 0;
    for (const Poly& f : enumerate_monic(P.field(), n)) {
      const int chi = residue_symbol(P, f);
      if (chi != 0) {
        const auto d = static_cast<std::int64_t>(table.divisor_count(base + i));
        b_n += chi * d;
        if (table.is_square(base + i)) sq_n += chi * d;
      }
      ++i;
    }
    if (n % 2 == 0) {
      const BigInt w = pow_big(q, 2 * g - n / 2);
      r.divisor_sum_a += copies * b_n * w;
      r.square_part += copies * sq_n * w;
    } else {
      r.divisor_sum_b += copies * b_n * pow_big(q, 2 * g - (n + 1) / 2);
    }
  }

  // chi_P(l^2) = 1 for every l of degree <= g since deg P > g.
  for (int m = 0; m <= g; ++m) {
    const int copies = m <= g - 1 ? 2 : 1;
    r.square_part_closed_form += copies * divisor_square_sum(P.field(), m) * pow_big(q, 2 * g - m);
  }

  const CentralValue v = halfsum_value(P);
  r.square_a = v.x * v.x + q * v.y * v.y;
  r.square_b = 2 * v.x * v.y;
  return r;
}

}  // namespace ffm
