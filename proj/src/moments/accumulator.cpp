#include <cmath>

#include "ffm/arith.hpp"
#include "ffm/errors.hpp"
#include "ffm/moments.hpp"

namespace ffm {

namespace {

std::int64_t small_pow(std::uint32_t q, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= q;
  return r;
}

}  // namespace

MomentAccumulator::MomentAccumulator(std::uint32_t q_, int g_, int max_moment_)
    : q(q_), g(g_), max_moment(max_moment_) {
  if (max_moment < 2) throw UsageError("max_moment must be at least 2");
  higher.resize(static_cast<std::size_t>(max_moment - 2));
}

void MomentAccumulator::add(const HalfSumEvaluator::Result& r) {
  const std::int64_t qg = small_pow(q, g);
  if (r.square_scaled % qg != 0 || r.first_square_scaled % qg != 0) {
    throw ConsistencyError("square part of a half sum is not an integer: " + std::to_string(r.square_scaled) +
                           " / q^" + std::to_string(g));
  }
  const BigInt& x = r.value.x;
  const BigInt& y = r.value.y;
  ++prime_count;
  sum_x += x;
  sum_y += y;
  const BigInt sq_a = x * x + q * y * y;
  const BigInt sq_b = 2 * x * y;
  sum_sq_a += sq_a;
  sum_sq_b += sq_b;
  first_half_x += r.first_x;
  first_half_y += r.first_y;
  square_part_checksum += r.square_scaled / qg;
  first_half_square += r.first_square_scaled / qg;
  second_square_part += r.second_square_scaled;
  if (!r.value.is_zero()) ++nonvanishing_count;
  if (surd_sign(x, y, q) < 0) ++negative_count;
  if (!min_value || compare(r.value, *min_value) < 0) min_value = r.value;
  if (!max_value || compare(r.value, *max_value) > 0) max_value = r.value;

  BigInt pa = sq_a, pb = sq_b;
  for (auto& [a, b] : higher) {
    BigInt na = pa * x + q * pb * y;
    pb = pa * y + pb * x;
    pa = std::move(na);
    a += pa;
    b += pb;
  }
}

void MomentAccumulator::merge(const MomentAccumulator& o) {
  if (o.q != q || o.g != g || o.max_moment != max_moment) {
    throw UsageError("cannot merge accumulators of different (q, g, max_moment)");
  }
  prime_count += o.prime_count;
  sum_x += o.sum_x;
  sum_y += o.sum_y;
  sum_sq_a += o.sum_sq_a;
  sum_sq_b += o.sum_sq_b;
  first_half_x += o.first_half_x;
  first_half_y += o.first_half_y;
  square_part_checksum += o.square_part_checksum;
  first_half_square += o.first_half_square;
  second_square_part += o.second_square_part;
  nonvanishing_count += o.nonvanishing_count;
  negative_count += o.negative_count;
  if (o.min_value && (!min_value || compare(*o.min_value, *min_value) < 0)) min_value = o.min_value;
  if (o.max_value && (!max_value || compare(*o.max_value, *max_value) > 0)) max_value = o.max_value;
  for (std::size_t i = 0; i < higher.size(); ++i) {
    higher[i].first += o.higher[i].first;
    higher[i].second += o.higher[i].second;
  }
}

FirstMomentSplit first_moment_split(const MomentAccumulator& acc) {
  const std::uint32_t q = acc.q;
  const int g = acc.g;
  const BigInt qg = pow_big(q, g);
  const BigInt pi = count_primes(FieldSpec(q), 2 * g + 1);

  FirstMomentSplit s;
  s.square_part = acc.square_part_checksum;
  s.square_part_expected = (g + 1) * pi;
  s.nonsquare = Surd{acc.sum_x - s.square_part * qg, acc.sum_y, qg};
  s.nonsquare_float = s.nonsquare.value(q);
  if (g > 0) {
    const double scale = std::pow(static_cast<double>(q), 1.5 * g) * g / (2 * g + 1);
    s.normalized_nonsquare = round15(std::abs(s.nonsquare_float) / scale);
  }

  s.first_half.square = acc.first_half_square;
  s.first_half.nonsquare = Surd{acc.first_half_x - acc.first_half_square * qg, acc.first_half_y, qg};
  s.first_half.nonsquare_float = s.first_half.nonsquare.value(q);

  const BigInt second_square = acc.square_part_checksum - acc.first_half_square;
  s.second_half.square = second_square;
  s.second_half.nonsquare =
      Surd{acc.sum_x - acc.first_half_x - second_square * qg, acc.sum_y - acc.first_half_y, qg};
  s.second_half.nonsquare_float = s.second_half.nonsquare.value(q);
  return s;
}

SecondMomentSplit second_moment_split(const MomentAccumulator& acc) {
  const std::uint32_t q = acc.q;
  const int g = acc.g;
  const FieldSpec field(q);
  const BigInt q2g = pow_big(q, 2 * g);
  const BigInt pi = count_primes(field, 2 * g + 1);

  BigInt expected = 0;
  for (int m = 0; m <= g; ++m) {
    const int copies = m < g ? 2 : 1;
    expected += copies * divisor_square_sum(field, m) * pow_big(q, 2 * g - m);
  }

  SecondMomentSplit s;
  s.square_part = Surd{acc.second_square_part, 0, q2g};
  s.square_part_expected = Surd{pi * expected, 0, q2g};
  s.nonsquare = Surd{acc.sum_sq_a - acc.second_square_part, acc.sum_sq_b, q2g};
  s.square_float = s.square_part.value(q);
  s.nonsquare_float = s.nonsquare.value(q);
  if (g > 0) {
    const double norm = std::pow(static_cast<double>(q), 2 * g + 1);
    s.normalized_nonsquare = round15(std::abs(s.nonsquare_float) / (norm * g));
    const double main = static_cast<double>(pi) * (1.0 - 1.0 / q) / 12.0 *
                        (double(g) * (g + 1) * (2 * g + 1) + double(g - 1) * g * (2 * g - 1));
    s.square_over_main_term = round15(s.square_float / main);
  }
  return s;
}

}  // namespace ffm
