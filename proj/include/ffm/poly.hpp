#pragma once

#include <cstdint>
#include <iterator>
#include <span>
#include <string>
#include <string_view>

#include <boost/container/small_vector.hpp>

#include "ffm/bigint.hpp"
#include "ffm/field.hpp"

namespace ffm {

/// Dense polynomial over F_q, coefficients stored low-to-high.
///
/// The zero polynomial has no coefficients and degree -1; every other value
/// is normalized so its top coefficient is nonzero. Operands of binary
/// operations must live over the same field or UsageError is thrown.
class Poly {
 public:
  using Coeffs = boost::container::small_vector<std::uint32_t, 24>;

  explicit Poly(FieldSpec field) : field_(field) {}
  /// Coefficients are reduced mod q and trailing zeros stripped.
  Poly(FieldSpec field, std::span<const std::int64_t> coeffs);
  Poly(FieldSpec field, std::initializer_list<std::int64_t> coeffs);
  Poly(FieldSpec field, Coeffs coeffs);

  static Poly zero(FieldSpec f) { return Poly(f); }
  static Poly one(FieldSpec f) { return constant(f, 1); }
  static Poly constant(FieldSpec f, std::uint32_t c);
  /// c * T^n
  static Poly monomial(FieldSpec f, int n, std::uint32_t c = 1);

  const FieldSpec& field() const noexcept { return field_; }
  std::uint32_t q() const noexcept { return field_.q(); }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
  std::uint32_t lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
  std::uint32_t coeff(int i) const noexcept {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0;
  }
  std::span<const std::uint32_t> coeffs() const noexcept { return {c_.data(), c_.size()}; }

  std::uint32_t operator()(std::uint32_t x) const noexcept;

  friend bool operator==(const Poly& a, const Poly& b) noexcept {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

 private:
  void normalize() noexcept;

  FieldSpec field_;
  Coeffs c_;
};

struct DivRem {
  Poly quot;
  Poly rem;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly scale(const Poly& a, std::uint32_t c);

/// a = b*quot + rem with deg rem < deg b. Throws DomainError when b = 0.
DivRem divrem(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);

/// Divides by the leading coefficient; zero stays zero.
Poly make_monic(const Poly& a);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly derivative(const Poly& a);

/// (a*b) mod m, result of degree < deg m.
Poly mulmod(const Poly& a, const Poly& b, const Poly& m);
/// a^e mod m by square-and-multiply; a^0 = 1.
Poly powmod(const Poly& a, const BigInt& e, const Poly& m);
Poly powmod(const Poly& a, std::uint64_t e, const Poly& m);

/// "c0,c1,...,cn" low-to-high; the zero polynomial prints as "0".
std::string to_string(const Poly& p);
/// Inverse of to_string. Rejects coefficients outside [0, q), empty fields,
/// and, with require_monic, anything whose leading coefficient is not 1.
Poly parse_poly(FieldSpec field, std::string_view text, bool require_monic);

/// Position of a monic polynomial in the enumeration order of its degree:
/// sum of coeff_i * q^i over i < deg.
std::uint64_t monic_index(const Poly& f);
Poly monic_from_index(FieldSpec field, int degree, std::uint64_t index);
/// q^n, throwing UsageError if it does not fit in 64 bits.
std::uint64_t monic_count(FieldSpec field, int degree);

/// All monic polynomials of a fixed degree, coeff_0 varying fastest.
/// The order is part of the contract: sweep chunks and checkpoints are
/// defined as index ranges within it.
class MonicRange {
 public:
  MonicRange(FieldSpec field, int degree);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Poly;
    using difference_type = std::ptrdiff_t;
    using pointer = const Poly*;
    using reference = const Poly&;

    iterator(Poly current, std::uint64_t index) : cur_(std::move(current)), index_(index) {}
    const Poly& operator*() const noexcept { return cur_; }
    const Poly* operator->() const noexcept { return &cur_; }
    iterator& operator++();
    iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) noexcept {
      return a.index_ == b.index_;
    }

   private:
    Poly cur_;
    std::uint64_t index_;
  };

  iterator begin() const;
  iterator end() const;
  std::uint64_t size() const noexcept { return count_; }

 private:
  FieldSpec field_;
  int degree_;
  std::uint64_t count_;
};

inline MonicRange enumerate_monic(FieldSpec field, int degree) { return {field, degree}; }

/// Irreducibility kernel shared with arith::is_irreducible; expects a monic
/// polynomial of degree >= 1 and does no argument checking.
bool irreducible_unchecked(const Poly& f);

}  // namespace ffm
