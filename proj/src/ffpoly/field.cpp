#include "ffm/field.hpp"

#include <string>

namespace ffm {

bool is_prime_u32(std::uint32_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec::FieldSpec(std::uint32_t q) : q_(q) {
  if (q <= 4 || q >= (1u << 16)) {
    throw InvalidField("q = " + std::to_string(q) + " is outside the supported range 4 < q < 65536");
  }
  if (!is_prime_u32(q)) {
    throw InvalidField("q = " + std::to_string(q) + " is not prime");
  }
  if (q % 4 != 1) {
    throw InvalidField("q = " + std::to_string(q) +
                       " is 3 mod 4; the L-function family requires q = 1 (mod 4)");
  }
}

std::uint32_t FieldSpec::pow(std::uint32_t a, std::uint64_t e) const noexcept {
  std::uint64_t base = a % q_;
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = r * base % q_;
    base = base * base % q_;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t FieldSpec::inv(std::uint32_t a) const {
  if (a % q_ == 0) throw DomainError("inverse of zero in F_q");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = q_, new_r = a % q_;
  while (new_r != 0) {
    std::int64_t quo = r / new_r;
    std::int64_t tmp = t - quo * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quo * new_r;
    r = new_r;
    new_r = tmp;
  }
  return reduce(t);
}

int FieldSpec::legendre(std::uint32_t a) const noexcept {
  a %= q_;
  if (a == 0) return 0;
  return pow(a, (q_ - 1) / 2) == 1 ? 1 : -1;
}

}  // namespace ffm
