#include "ffm/ext_field.hpp"

#include <string>

#include "ffm/errors.hpp"

namespace ffm {

namespace {

Poly first_irreducible(FieldSpec base, int degree) {
  if (degree < 1) throw UsageError("extension degree must be >= 1");
  for (const Poly& f : enumerate_monic(base, degree)) {
    if (irreducible_unchecked(f)) return f;
  }
  throw ConsistencyError("no irreducible polynomial of degree " + std::to_string(degree));
}

}  // namespace

ExtField::ExtField(FieldSpec base, int degree) : ExtField(first_irreducible(base, degree)) {}

ExtField::ExtField(Poly modulus) : modulus_(std::move(modulus)) {
  if (!modulus_.is_monic() || modulus_.degree() < 1 || !irreducible_unchecked(modulus_)) {
    throw DomainError("extension modulus " + to_string(modulus_) + " is not monic irreducible");
  }
  order_ = pow_big(base().q(), static_cast<unsigned>(degree()));
  half_order_ = (order_ - 1) / 2;
}

Poly ExtField::element(std::uint64_t index) const {
  Poly::Coeffs c(static_cast<std::size_t>(degree()), 0);
  for (int i = 0; i < degree(); ++i) {
    c[i] = static_cast<std::uint32_t>(index % base().q());
    index /= base().q();
  }
  return Poly(base(), std::move(c));
}

std::uint64_t ExtField::index_of(const Poly& a) const {
  std::uint64_t idx = 0;
  for (int i = degree() - 1; i >= 0; --i) idx = idx * base().q() + a.coeff(i);
  return idx;
}

int ExtField::quadratic_character(const Poly& c) const {
  Poly r = reduce(c);
  if (r.is_zero()) return 0;
  Poly e = pow(r, half_order_);
  if (e.is_one()) return 1;
  if (e.degree() == 0 && e.coeff(0) == base().q() - 1) return -1;
  throw ConsistencyError("Euler criterion produced a non +/-1 value in F_{q^n}");
}

QuadraticCharacterTable::QuadraticCharacterTable(const ExtField& field) {
  if (field.order() > BigInt(1u << 26)) {
    throw UsageError("extension field too large for a character table");
  }
  const auto n = static_cast<std::uint64_t>(field.order());
  values_.assign(n, -1);
  values_[0] = 0;
  for (std::uint64_t i = 1; i < n; ++i) {
    Poly x = field.element(i);
    values_[field.index_of(field.mul(x, x))] = 1;
  }
}

}  // namespace ffm
