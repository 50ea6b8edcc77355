#pragma once

#include <cstdint>
#include <vector>

#include "ffm/arith.hpp"

namespace ffm {

/// Every monic polynomial of degree <= max_degree, with a smallest prime
/// factor recorded for each, built by sieving products p*h.
///
/// Global index of a monic f of degree n is offset(n) + monic_index(f).
/// The table is immutable after construction and shared read-only between
/// sweep workers.
class MonicTable {
 public:
  static constexpr std::uint32_t kNone = 0xffffffffu;

  MonicTable(FieldSpec field, int max_degree);

  const FieldSpec& field() const noexcept { return field_; }
  int max_degree() const noexcept { return max_degree_; }
  std::uint64_t size() const noexcept { return spf_.size(); }
  std::uint64_t offset(int degree) const noexcept { return offsets_[degree]; }
  int degree_of(std::uint64_t gidx) const noexcept { return degree_[gidx]; }

  Poly poly(std::uint64_t gidx) const;
  std::uint64_t index_of(const Poly& f) const;

  bool is_prime(std::uint64_t gidx) const noexcept { return gidx != 0 && spf_[gidx] == gidx; }
  /// Smallest prime factor and the matching cofactor; kNone for f = 1.
  std::uint32_t smallest_prime_factor(std::uint64_t gidx) const noexcept { return spf_[gidx]; }
  std::uint32_t cofactor(std::uint64_t gidx) const noexcept { return cofactor_[gidx]; }

  Factorization factorization(std::uint64_t gidx) const;
  bool is_square(std::uint64_t gidx) const;
  std::uint64_t divisor_count(std::uint64_t gidx) const;
  std::uint64_t divisor_count_of_square(std::uint64_t gidx) const;

  /// Global indices of the primes of degree <= max_degree in order.
  const std::vector<std::uint32_t>& primes() const noexcept { return primes_; }

 private:
  FieldSpec field_;
  int max_degree_;
  std::vector<std::uint64_t> offsets_;
  std::vector<std::uint8_t> degree_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> cofactor_;
  std::vector<std::uint32_t> primes_;
};

}  // namespace ffm
