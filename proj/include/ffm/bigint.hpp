#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ffm {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

// Throws UsageError on anything but an optionally signed run of digits.
BigInt parse_decimal(const std::string& text);

BigInt pow_big(std::uint64_t base, unsigned exponent);

// Nearest double of a / b, computed with enough guard digits that the
// result is correctly rounded for all magnitudes that fit a double.
double ratio_to_double(const BigInt& num, const BigInt& den);

// (a + b*sqrt(q)) / den as a double, evaluated in 50-digit binary floating
// point so cancellation between the two parts does not lose digits.
double surd_to_double(const BigInt& a, const BigInt& b, std::uint32_t q, const BigInt& den);

// Sign of a + b*sqrt(q) for a non-square positive q, exactly.
int surd_sign(const BigInt& a, const BigInt& b, std::uint32_t q);

// Round to 15 significant digits so serialized floats are diff-stable.
double round15(double x);

}  // namespace ffm
