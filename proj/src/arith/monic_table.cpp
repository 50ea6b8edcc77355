#include "ffm/monic_table.hpp"

#include <limits>

#include "ffm/errors.hpp"

namespace ffm {

MonicTable::MonicTable(FieldSpec field, int max_degree) : field_(field), max_degree_(max_degree) {
  if (max_degree < 0) throw UsageError("MonicTable: negative max degree");
  const std::uint64_t q = field.q();
  offsets_.assign(static_cast<std::size_t>(max_degree) + 2, 0);
  std::uint64_t total = 0;
  for (int n = 0; n <= max_degree; ++n) {
    offsets_[n] = total;
    total += monic_count(field, n);
    if (total >= kNone) throw UsageError("MonicTable: too many polynomials for 32-bit indices");
  }
  offsets_[max_degree + 1] = total;

  degree_.resize(total);
  for (int n = 0; n <= max_degree; ++n) {
    std::fill(degree_.begin() + static_cast<std::ptrdiff_t>(offsets_[n]),
              degree_.begin() + static_cast<std::ptrdiff_t>(offsets_[n + 1]), static_cast<std::uint8_t>(n));
  }
  spf_.assign(total, kNone);
  cofactor_.assign(total, kNone);

  std::vector<std::uint32_t> pc(static_cast<std::size_t>(max_degree) + 1);
  std::vector<std::uint32_t> hc(static_cast<std::size_t>(max_degree) + 1);
  std::vector<std::uint64_t> prod(2 * static_cast<std::size_t>(max_degree) + 2);

  for (int k = 1; k <= max_degree; ++k) {
    const std::uint64_t count_k = offsets_[k + 1] - offsets_[k];
    for (std::uint64_t idx = 0; idx < count_k; ++idx) {
      const std::uint64_t g = offsets_[k] + idx;
      if (spf_[g] != kNone) continue;
      spf_[g] = static_cast<std::uint32_t>(g);
      cofactor_[g] = 0;
      primes_.push_back(static_cast<std::uint32_t>(g));

      std::uint64_t t = idx;
      for (int i = 0; i < k; ++i) {
        pc[i] = static_cast<std::uint32_t>(t % q);
        t /= q;
      }
      pc[k] = 1;

      for (int m = k; m + k <= max_degree; ++m) {
        std::fill(hc.begin(), hc.end(), 0);
        hc[m] = 1;
        const std::uint64_t count_m = offsets_[m + 1] - offsets_[m];
        for (std::uint64_t hidx = 0; hidx < count_m; ++hidx) {
          std::fill(prod.begin(), prod.begin() + k + m + 1, 0);
          for (int i = 0; i <= k; ++i) {
            if (pc[i] == 0) continue;
            for (int j = 0; j <= m; ++j) prod[i + j] += static_cast<std::uint64_t>(pc[i]) * hc[j];
          }
          std::uint64_t pidx = 0;
          for (int i = k + m - 1; i >= 0; --i) pidx = pidx * q + prod[i] % q;
          const std::uint64_t pg = offsets_[k + m] + pidx;
          if (spf_[pg] == kNone) {
            spf_[pg] = static_cast<std::uint32_t>(g);
            cofactor_[pg] = static_cast<std::uint32_t>(offsets_[m] + hidx);
          }
          for (int i = 0; i < m; ++i) {
            if (++hc[i] < q) break;
            hc[i] = 0;
          }
        }
      }
    }
  }
}

Poly MonicTable::poly(std::uint64_t gidx) const {
  const int n = degree_[gidx];
  return monic_from_index(field_, n, gidx - offsets_[n]);
}

std::uint64_t MonicTable::index_of(const Poly& f) const {
  if (!f.is_monic() || f.degree() > max_degree_) throw UsageError("MonicTable::index_of: not covered by table");
  return offsets_[f.degree()] + monic_index(f);
}

Factorization MonicTable::factorization(std::uint64_t gidx) const {
  Factorization out;
  std::uint64_t cur = gidx;
  while (cur != 0) {
    const std::uint32_t p = spf_[cur];
    if (!out.factors.empty() && index_of(out.factors.back().prime) == p) {
      ++out.factors.back().exponent;
    } else {
      out.factors.push_back({poly(p), 1});
    }
    cur = cofactor_[cur];
  }
  return out;
}

namespace {

template <class F>
void for_each_exponent(const MonicTable& t, std::uint64_t gidx, F&& fn) {
  std::uint64_t cur = gidx;
  std::uint32_t last = MonicTable::kNone;
  int e = 0;
  while (cur != 0) {
    const std::uint32_t p = t.smallest_prime_factor(cur);
    if (p == last) {
      ++e;
    } else {
      if (e) fn(e);
      last = p;
      e = 1;
    }
    cur = t.cofactor(cur);
  }
  if (e) fn(e);
}

}  // namespace

bool MonicTable::is_square(std::uint64_t gidx) const {
  bool square = true;
  for_each_exponent(*this, gidx, [&](int e) { square = square && (e % 2 == 0); });
  return square;
}

std::uint64_t MonicTable::divisor_count(std::uint64_t gidx) const {
  std::uint64_t d = 1;
  for_each_exponent(*this, gidx, [&](int e) { d *= static_cast<std::uint64_t>(e) + 1; });
  return d;
}

std::uint64_t MonicTable::divisor_count_of_square(std::uint64_t gidx) const {
  std::uint64_t d = 1;
  for_each_exponent(*this, gidx, [&](int e) { d *= 2 * static_cast<std::uint64_t>(e) + 1; });
  return d;
}

}  // namespace ffm
