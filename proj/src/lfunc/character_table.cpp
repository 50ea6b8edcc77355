#include <algorithm>

#include "ffm/arith.hpp"
#include "ffm/errors.hpp"
#include "ffm/lfunc.hpp"

namespace ffm {

namespace {

constexpr std::uint64_t kResidueBudget = std::uint64_t{1} << 25;

}  // namespace

HalfSumEvaluator::HalfSumEvaluator(FieldSpec field, int genus)
    : field_(field), genus_(genus), table_(field, genus) {
  if (genus < 0) throw UsageError("genus must be non-negative");
  const std::uint32_t q = field.q();
  // Largest accumulator is the divisor-weighted square part, bounded by
  // 2 (g+1) 3^g q^(2g).
  const BigInt bound = 2 * BigInt(genus + 1) * pow_big(3, genus) * pow_big(q, 2 * genus);
  if (bound >= BigInt(1) << 62) {
    throw UsageError("q^(2g) too large for the half-sum evaluator");
  }
  for (int k = 0; k <= 2 * genus; ++k) q_pow_.push_back(static_cast<std::int64_t>(monic_count(field, k)));

  std::uint64_t used = 0;
  for (const std::uint32_t gidx : table_.primes()) {
    Poly p = table_.poly(gidx);
    const std::uint64_t size = monic_count(field, p.degree());
    if (used + size <= kResidueBudget) {
      residue_offset_.push_back(static_cast<std::int64_t>(residues_.size()));
      const QuadraticCharacterTable chars{ExtField(p)};
      for (std::uint64_t i = 0; i < size; ++i) residues_.push_back(static_cast<std::int8_t>(chars[i]));
      used += size;
    } else {
      residue_offset_.push_back(-1);
    }
    prime_polys_.push_back(std::move(p));
  }

  square_.resize(table_.size());
  d_square_.resize(table_.size());
  for (std::uint64_t i = 0; i < table_.size(); ++i) {
    square_[i] = table_.is_square(i) ? 1 : 0;
    d_square_[i] = static_cast<std::uint32_t>(table_.divisor_count_of_square(i));
  }
}

void HalfSumEvaluator::fill_characters(const Poly& P, std::vector<std::int8_t>& chi) const {
  if (!(P.field() == field_) || P.degree() != 2 * genus_ + 1) {
    throw UsageError("half-sum evaluator for genus " + std::to_string(genus_) +
                     " received a polynomial of degree " + std::to_string(P.degree()));
  }
  const std::uint32_t q = field_.q();
  const auto pc = P.coeffs();

  chi.assign(table_.size(), 0);
  chi[0] = 1;

  std::uint32_t rem[64];
  const auto& primes = table_.primes();
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const Poly& p = prime_polys_[i];
    if (residue_offset_[i] < 0) {
      chi[primes[i]] = static_cast<std::int8_t>(residue_symbol(P, p));
      continue;
    }
    // P mod p by schoolbook division against a monic divisor.
    const int k = p.degree();
    const auto dc = p.coeffs();
    std::copy(pc.begin(), pc.end(), rem);
    for (int top = P.degree(); top >= k; --top) {
      const std::uint64_t c = rem[top];
      if (c == 0) continue;
      const std::uint64_t neg = q - c;
      for (int j = 0; j < k; ++j) {
        rem[top - k + j] = static_cast<std::uint32_t>((rem[top - k + j] + neg * dc[j]) % q);
      }
    }
    std::uint64_t index = 0;
    for (int j = k - 1; j >= 0; --j) index = index * q + rem[j];
    chi[primes[i]] = residues_[static_cast<std::uint64_t>(residue_offset_[i]) + index];
  }
  for (std::uint64_t f = 1; f < table_.size(); ++f) {
    if (table_.is_prime(f)) continue;
    chi[f] = static_cast<std::int8_t>(chi[table_.smallest_prime_factor(f)] * chi[table_.cofactor(f)]);
  }
}

std::vector<std::int64_t> HalfSumEvaluator::character_sums(const Poly& P) const {
  std::vector<std::int8_t> chi;
  fill_characters(P, chi);
  std::vector<std::int64_t> a(genus_ + 1, 0);
  for (std::uint64_t f = 0; f < table_.size(); ++f) a[table_.degree_of(f)] += chi[f];
  return a;
}

HalfSumEvaluator::Result HalfSumEvaluator::evaluate(const Poly& P) const {
  thread_local std::vector<std::int8_t> chi;
  fill_characters(P, chi);
  const std::uint32_t q = field_.q();
  const int g = genus_;

  Result r;
  std::int64_t x = 0, y = 0;
  for (int n = 0; n <= g; ++n) {
    std::int64_t a_n = 0, sq_n = 0, d_n = 0;
    const std::uint64_t lo = table_.offset(n);
    const std::uint64_t hi = lo + static_cast<std::uint64_t>(q_pow_[n]);
    for (std::uint64_t f = lo; f < hi; ++f) {
      a_n += chi[f];
      if (square_[f]) sq_n += chi[f];
      d_n += chi[f] * chi[f] * static_cast<std::int64_t>(d_square_[f]);
    }
    const int copies = n < g ? 2 : 1;
    std::int64_t* part = n % 2 == 0 ? &x : &y;
    std::int64_t* first = n % 2 == 0 ? &r.first_x : &r.first_y;
    const std::int64_t w = q_pow_[g - (n + 1) / 2];
    *part += copies * a_n * w;
    *first += a_n * w;
    if (n % 2 == 0) {
      r.square_scaled += copies * sq_n * w;
      r.first_square_scaled += sq_n * w;
    }
    r.second_square_scaled += copies * d_n * q_pow_[2 * g - n];
  }
  r.value = CentralValue{x, y, g, q};
  return r;
}

}  // namespace ffm
