#pragma once

#include <cstdint>

#include "ffm/errors.hpp"

namespace ffm {

class InvalidField : public UsageError {
 public:
  using UsageError::UsageError;
};

bool is_prime_u32(std::uint32_t n) noexcept;

/// The prime field F_q for an odd prime q with q = 1 (mod 4) and 4 < q < 2^16.
///
/// Elements are plain residues in [0, q). The congruence condition makes -1
/// a square in F_q, so quadratic reciprocity in F_q[T] carries no sign and
/// the symbol (A/B) is symmetric on coprime monic pairs.
class FieldSpec {
 public:
  /// Throws InvalidField when q is composite, out of range, or 3 mod 4.
  explicit FieldSpec(std::uint32_t q);

  std::uint32_t q() const noexcept { return q_; }

  std::uint32_t reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(q_);
    return static_cast<std::uint32_t>(r < 0 ? r + q_ : r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint32_t s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return a >= b ? a - b : a + q_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : q_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % q_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;
  /// Throws DomainError for a = 0.
  std::uint32_t inv(std::uint32_t a) const;
  /// Legendre symbol of a in F_q: 0, +1 or -1.
  int legendre(std::uint32_t a) const noexcept;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::uint32_t q_;
};

}  // namespace ffm
