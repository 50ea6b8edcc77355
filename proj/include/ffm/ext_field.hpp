#pragma once

#include <cstdint>
#include <vector>

#include "ffm/bigint.hpp"
#include "ffm/poly.hpp"

namespace ffm {

/// F_{q^n} realized as F_q[T]/(m) for a monic irreducible m of degree n.
/// Elements are residues (Poly of degree < n).
class ExtField {
 public:
  /// Uses the first monic irreducible of degree n in enumeration order, so
  /// every run picks the same model of the field.
  ExtField(FieldSpec base, int degree);
  /// Throws DomainError if modulus is not monic irreducible.
  explicit ExtField(Poly modulus);

  const FieldSpec& base() const noexcept { return modulus_.field(); }
  int degree() const noexcept { return modulus_.degree(); }
  const Poly& modulus() const noexcept { return modulus_; }
  /// q^n
  const BigInt& order() const noexcept { return order_; }

  Poly zero() const { return Poly::zero(base()); }
  Poly one() const { return Poly::one(base()); }
  Poly embed(std::uint32_t c) const { return Poly::constant(base(), c); }
  Poly reduce(const Poly& a) const { return a % modulus_; }

  Poly add(const Poly& a, const Poly& b) const { return a + b; }
  Poly mul(const Poly& a, const Poly& b) const { return mulmod(a, b, modulus_); }
  Poly pow(const Poly& a, const BigInt& e) const { return powmod(a, e, modulus_); }

  /// Element with base-q digits of `index` as coefficients, index < q^n.
  Poly element(std::uint64_t index) const;
  std::uint64_t index_of(const Poly& a) const;

  /// Euler criterion c^((q^n - 1)/2): 0 for c = 0, +1 on nonzero squares,
  /// -1 otherwise.
  int quadratic_character(const Poly& c) const;

 private:
  Poly modulus_;
  BigInt order_;
  BigInt half_order_;
};

/// Quadratic character of every element of a small extension field, indexed
/// by ExtField::index_of. Built by squaring each element once.
class QuadraticCharacterTable {
 public:
  explicit QuadraticCharacterTable(const ExtField& field);
  int operator[](std::uint64_t index) const noexcept { return values_[index]; }
  std::uint64_t size() const noexcept { return values_.size(); }

 private:
  std::vector<std::int8_t> values_;
};

}  // namespace ffm
