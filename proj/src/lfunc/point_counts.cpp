#include "ffm/errors.hpp"
#include "ffm/lfunc.hpp"

namespace ffm {

namespace {

constexpr std::uint64_t kLogTableLimit = std::uint64_t{1} << 22;

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

struct PointCounter::Level {
  ExtField ext;
  std::uint64_t size = 0;
  // Empty when size exceeds kLogTableLimit.
  std::vector<std::uint32_t> log;  // log[0] unused
  std::vector<std::uint32_t> exp;  // exp[k] = index of g^k, k < size - 1

  Level(FieldSpec base, int n) : ext(base, n), size(monic_count(base, n)) {
    if (size > kLogTableLimit) return;
    const std::uint64_t order = size - 1;
    const auto divisors = prime_divisors(order);
    Poly gen = ext.one();
    for (std::uint64_t i = 1; i < size; ++i) {
      gen = ext.element(i);
      bool primitive = true;
      for (const std::uint64_t r : divisors) {
        if (powmod(gen, order / r, ext.modulus()).is_one()) {
          primitive = false;
          break;
        }
      }
      if (primitive) break;
    }
    log.assign(size, 0);
    exp.resize(order);
    Poly x = ext.one();
    for (std::uint64_t k = 0; k < order; ++k) {
      const auto idx = static_cast<std::uint32_t>(ext.index_of(x));
      exp[k] = idx;
      log[idx] = static_cast<std::uint32_t>(k);
      x = ext.mul(x, gen);
    }
    if (!x.is_one()) throw ConsistencyError("generator search failed in F_q^" + std::to_string(n));
  }

  int character(std::uint64_t index) const {
    if (index == 0) return 0;
    if (log.empty()) return ext.quadratic_character(ext.element(index));
    return log[index] % 2 == 0 ? 1 : -1;
  }

  // sum over t in F_(q^n) of chi(P(t))
  std::int64_t character_sum(const Poly& P) const {
    const std::uint32_t q = ext.base().q();
    const auto pc = P.coeffs();
    std::int64_t s = 0;
    if (log.empty()) {
      for (std::uint64_t i = 0; i < size; ++i) {
        const Poly t = ext.element(i);
        Poly acc = ext.one();
        for (int j = P.degree() - 1; j >= 0; --j) acc = ext.mul(acc, t) + ext.embed(pc[j]);
        s += ext.quadratic_character(acc);
      }
      return s;
    }
    const std::uint64_t order = size - 1;
    for (std::uint64_t t = 0; t < size; ++t) {
      std::uint64_t acc = 1;
      for (int j = P.degree() - 1; j >= 0; --j) {
        acc = (acc == 0 || t == 0) ? 0 : exp[(log[acc] + log[t]) % order];
        const std::uint64_t d0 = acc % q;
        acc = acc - d0 + (d0 + pc[j]) % q;
      }
      s += character(acc);
    }
    return s;
  }
};

PointCounter::PointCounter(FieldSpec field, int max_extension_degree) : field_(field) {
  if (max_extension_degree < 1) throw UsageError("point counts need at least one extension degree");
  for (int n = 1; n <= max_extension_degree; ++n) levels_.push_back(std::make_unique<Level>(field, n));
}

PointCounter::~PointCounter() = default;
PointCounter::PointCounter(PointCounter&&) noexcept = default;
PointCounter& PointCounter::operator=(PointCounter&&) noexcept = default;

int PointCounter::character(int n, std::uint64_t index) const { return levels_.at(n - 1)->character(index); }

PointCounts PointCounter::count(const Poly& P) const {
  if (!(P.field() == field_) || !P.is_monic()) throw UsageError("point counter expects a monic curve polynomial over its field");
  PointCounts out{P, {}};
  for (const auto& level : levels_) {
    // Affine t contributes 1 + chi(P(t)) points; plus one at infinity.
    out.counts.push_back(BigInt(level->size) + 1 + level->character_sum(P));
  }
  return out;
}

PointCounts point_counts(const Poly& P, int max_extension_degree) {
  return PointCounter(P.field(), max_extension_degree).count(P);
}

bool weil_bound_holds(const PointCounts& counts, int genus) {
  const std::uint32_t q = counts.curve.q();
  for (std::size_t i = 0; i < counts.counts.size(); ++i) {
    const unsigned n = static_cast<unsigned>(i + 1);
    const BigInt qn = pow_big(q, n);
    const BigInt e = counts.counts[i] - qn - 1;
    if (e * e > 4 * BigInt(genus) * genus * qn) return false;
  }
  return true;
}

LPolynomial lpoly_from_counts(const PointCounts& counts, int genus) {
  if (static_cast<int>(counts.counts.size()) < genus) {
    throw UsageError("need N_1..N_g to recover the L-polynomial, got " + std::to_string(counts.counts.size()));
  }
  const std::uint32_t q = counts.curve.q();
  std::vector<BigInt> s(genus + 1);
  for (int n = 1; n <= genus; ++n) s[n] = pow_big(q, n) + 1 - counts.counts[n - 1];

  LPolynomial L{counts.curve, genus, std::vector<BigInt>(2 * genus + 1)};
  L.coeffs[0] = 1;
  for (int k = 1; k <= genus; ++k) {
    BigInt acc = 0;
    for (int i = 1; i <= k; ++i) acc -= s[i] * L.coeffs[k - i];
    if (acc % k != 0) {
      throw ConsistencyError("Newton identity division not exact at k = " + std::to_string(k) +
                             " for " + to_string(counts.curve));
    }
    L.coeffs[k] = acc / k;
  }
  for (int n = genus + 1; n <= 2 * genus; ++n) L.coeffs[n] = pow_big(q, n - genus) * L.coeffs[2 * genus - n];
  return L;
}

PointCounts counts_from_lpoly(const LPolynomial& L, int max_extension_degree) {
  const std::uint32_t q = L.field().q();
  const int top = static_cast<int>(L.coeffs.size()) - 1;
  auto a = [&](int k) -> BigInt { return k <= top ? L.coeffs[k] : BigInt(0); };
  std::vector<BigInt> s(max_extension_degree + 1);
  PointCounts out{L.modulus, {}};
  for (int k = 1; k <= max_extension_degree; ++k) {
    BigInt acc = -BigInt(k) * a(k);
    for (int i = 1; i < k; ++i) acc -= s[i] * a(k - i);
    s[k] = acc;
    out.counts.push_back(pow_big(q, k) + 1 - acc);
  }
  return out;
}

}  // namespace ffm
