#include "ffm/bigint.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "ffm/errors.hpp"

namespace ffm {

using Float50 = boost::multiprecision::cpp_bin_float_50;

BigInt parse_decimal(const std::string& text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (text.size() == start) throw UsageError("expected a decimal integer, got '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw UsageError("expected a decimal integer, got '" + text + "'");
    }
  }
  BigInt v(text.substr(start));
  return text[0] == '-' ? BigInt(-v) : v;
}

BigInt pow_big(std::uint64_t base, unsigned exponent) {
  return boost::multiprecision::pow(BigInt(base), exponent);
}

double ratio_to_double(const BigInt& num, const BigInt& den) {
  Float50 r = Float50(num) / Float50(den);
  return r.convert_to<double>();
}

double surd_to_double(const BigInt& a, const BigInt& b, std::uint32_t q, const BigInt& den) {
  Float50 v = (Float50(a) + Float50(b) * boost::multiprecision::sqrt(Float50(q))) / Float50(den);
  return v.convert_to<double>();
}

int surd_sign(const BigInt& a, const BigInt& b, std::uint32_t q) {
  int sa = a.sign();
  int sb = b.sign();
  if (sa >= 0 && sb >= 0) return (sa > 0 || sb > 0) ? 1 : 0;
  if (sa <= 0 && sb <= 0) return -1;
  // Opposite signs: compare a^2 against q b^2. Equality is impossible for
  // non-square q unless both vanish, handled above.
  BigInt lhs = a * a;
  BigInt rhs = BigInt(q) * b * b;
  if (sa > 0) return lhs > rhs ? 1 : -1;
  return rhs > lhs ? 1 : -1;
}

double round15(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

}  // namespace ffm
