#include <cmath>
#include <limits>

#include "json.hpp"

#include "ffm/arith.hpp"
#include "ffm/errors.hpp"
#include "ffm/moments.hpp"

namespace ffm {

using json = nlohmann::ordered_json;

SweepReport make_report(const MomentAccumulator& acc, std::uint64_t candidates) {
  const std::uint32_t q = acc.q;
  const int g = acc.g;
  const int w = 2 * g + 1;
  const BigInt qg = pow_big(q, g);
  const BigInt q2g = pow_big(q, 2 * g);

  SweepReport r;
  r.q = q;
  r.g = g;
  r.norm = pow_big(q, w);
  r.candidates = candidates;
  r.prime_count_expected = count_primes(FieldSpec(q), w);
  r.acc = acc;

  const BigInt m2_num = (q - 1) * q2g * w * w;
  r.s1_unweighted = Surd{acc.sum_x, acc.sum_y, qg};
  r.s1_weighted = Surd{w * acc.sum_x, w * acc.sum_y, qg};
  r.m1 = Surd{r.norm * (g + 1), 0, 1};
  r.s2 = Surd{acc.sum_sq_a, acc.sum_sq_b, q2g};
  r.m2 = Surd{m2_num, 0, 24};
  r.d1 = Surd{w * acc.sum_x - r.norm * (g + 1) * qg, w * acc.sum_y, qg};
  r.d2 = Surd{24 * acc.sum_sq_a - m2_num * q2g, 24 * acc.sum_sq_b, 24 * q2g};

  r.s1_unweighted_float = r.s1_unweighted.value(q);
  r.s1_weighted_float = r.s1_weighted.value(q);
  r.m1_float = r.m1.value(q);
  r.s2_float = r.s2.value(q);
  r.m2_float = r.m2.value(q);
  r.d1_float = r.d1.value(q);
  r.d2_float = r.d2.value(q);

  const double norm = static_cast<double>(r.norm);
  r.d1_normalized = round15(surd_to_double(r.d1.a, r.d1.b, q, r.d1.den) / std::pow(norm, 0.75));
  r.d2_normalized = round15(surd_to_double(r.d2.a, r.d2.b, q, r.d2.den) / (norm * w));
  r.s1_ratio = round15(surd_to_double(r.s1_weighted.a, r.s1_weighted.b, q, r.s1_weighted.den * r.m1.a));
  r.s2_ratio = round15(surd_to_double(24 * r.s2.a, 24 * r.s2.b, q, r.s2.den * m2_num));
  if (acc.min_value) r.min_value_float = round15(acc.min_value->approx());
  if (acc.max_value) r.max_value_float = round15(acc.max_value->approx());

  r.first_split = first_moment_split(acc);
  r.second_split = second_moment_split(acc);

  // S1^2 and S2 share the denominator q^(2g).
  const BigInt s1sq_a = acc.sum_x * acc.sum_x + q * acc.sum_y * acc.sum_y;
  const BigInt s1sq_b = 2 * acc.sum_x * acc.sum_y;
  const BigInt nv = acc.nonvanishing_count;
  r.cauchy_schwarz_holds = surd_sign(nv * acc.sum_sq_a - s1sq_a, nv * acc.sum_sq_b - s1sq_b, q) >= 0;
  if (acc.prime_count > 0) {
    r.cauchy_schwarz_bound = round15(surd_to_double(s1sq_a, s1sq_b, q, 1) / surd_to_double(acc.sum_sq_a, acc.sum_sq_b, q, 1));
  }
  r.checksum_holds = acc.square_part_checksum == BigInt(g + 1) * acc.prime_count;
  r.prime_count_holds = BigInt(acc.prime_count) == r.prime_count_expected;

  for (std::size_t i = 0; i < acc.higher.size(); ++i) {
    const int k = static_cast<int>(i) + 3;
    HigherMoment h{k, Surd{acc.higher[i].first, acc.higher[i].second, pow_big(q, k * g)}, 0.0};
    h.value_float = h.value.value(q);
    r.higher.push_back(std::move(h));
  }
  return r;
}

namespace {

json big(const BigInt& v) { return to_decimal(v); }

BigInt get_big(const json& j, const char* key) {
  const json& v = j.at(key);
  if (!v.is_string()) throw UsageError(std::string("field '") + key + "' must be a decimal string");
  return parse_decimal(v.get<std::string>());
}

std::uint64_t get_count(const json& j, const char* key) {
  const BigInt v = get_big(j, key);
  if (v < 0 || v > BigInt(std::numeric_limits<std::uint64_t>::max())) {
    throw UsageError(std::string("field '") + key + "' out of range");
  }
  return static_cast<std::uint64_t>(v);
}

json surd_json(const Surd& s, double value) {
  return json{{"exact", {{"a", big(s.a)}, {"b", big(s.b)}, {"den", big(s.den)}}}, {"float", value}};
}

json optional_float(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json central_json(const std::optional<CentralValue>& v) {
  if (!v) return nullptr;
  return json{{"X", big(v->x)}, {"Y", big(v->y)}, {"float", round15(v->approx())}};
}

json accumulator_json(const MomentAccumulator& a) {
  json j;
  j["q"] = a.q;
  j["g"] = a.g;
  j["max_moment"] = a.max_moment;
  j["prime_count"] = big(a.prime_count);
  j["sum_X"] = big(a.sum_x);
  j["sum_Y"] = big(a.sum_y);
  j["sum_sq_A"] = big(a.sum_sq_a);
  j["sum_sq_B"] = big(a.sum_sq_b);
  j["first_half_X"] = big(a.first_half_x);
  j["first_half_Y"] = big(a.first_half_y);
  j["square_part_checksum"] = big(a.square_part_checksum);
  j["first_half_square"] = big(a.first_half_square);
  j["second_square_part"] = big(a.second_square_part);
  j["nonvanishing_count"] = big(a.nonvanishing_count);
  j["negative_count"] = big(a.negative_count);
  auto cv = [](const std::optional<CentralValue>& v) -> json {
    if (!v) return nullptr;
    return json{{"X", big(v->x)}, {"Y", big(v->y)}};
  };
  j["min_value"] = cv(a.min_value);
  j["max_value"] = cv(a.max_value);
  json h = json::array();
  for (std::size_t i = 0; i < a.higher.size(); ++i) {
    h.push_back({{"k", static_cast<int>(i) + 3}, {"A", big(a.higher[i].first)}, {"B", big(a.higher[i].second)}});
  }
  j["higher"] = std::move(h);
  return j;
}

MomentAccumulator accumulator_parse(const json& j) {
  const int g = j.at("g").get<int>();
  const auto q = j.at("q").get<std::uint32_t>();
  [[maybe_unused]] const FieldSpec validated(q);
  if (g < 0) throw UsageError("accumulator genus must be non-negative");
  MomentAccumulator a(q, g, j.at("max_moment").get<int>());
  a.prime_count = get_count(j, "prime_count");
  a.sum_x = get_big(j, "sum_X");
  a.sum_y = get_big(j, "sum_Y");
  a.sum_sq_a = get_big(j, "sum_sq_A");
  a.sum_sq_b = get_big(j, "sum_sq_B");
  a.first_half_x = get_big(j, "first_half_X");
  a.first_half_y = get_big(j, "first_half_Y");
  a.square_part_checksum = get_big(j, "square_part_checksum");
  a.first_half_square = get_big(j, "first_half_square");
  a.second_square_part = get_big(j, "second_square_part");
  a.nonvanishing_count = get_count(j, "nonvanishing_count");
  a.negative_count = get_count(j, "negative_count");
  auto cv = [&](const char* key) -> std::optional<CentralValue> {
    const json& v = j.at(key);
    if (v.is_null()) return std::nullopt;
    return CentralValue{get_big(v, "X"), get_big(v, "Y"), g, q};
  };
  a.min_value = cv("min_value");
  a.max_value = cv("max_value");
  const json& h = j.at("higher");
  if (h.size() != a.higher.size()) throw UsageError("higher-moment list does not match max_moment");
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i].at("k").get<int>() != static_cast<int>(i) + 3) throw UsageError("higher moments out of order");
    a.higher[i] = {get_big(h[i], "A"), get_big(h[i], "B")};
  }
  return a;
}

json half_json(const HalfSplit& h) {
  return json{{"square_part", big(h.square)}, {"nonsquare", surd_json(h.nonsquare, h.nonsquare_float)}};
}

json report_json(const SweepReport& r) {
  json j;
  j["q"] = r.q;
  j["g"] = r.g;
  j["norm_P"] = big(r.norm);
  j["candidates"] = big(r.candidates);
  j["prime_count"] = big(r.acc.prime_count);
  j["prime_count_expected"] = big(r.prime_count_expected);
  j["S1_unweighted"] = surd_json(r.s1_unweighted, r.s1_unweighted_float);
  j["S1_weighted"] = surd_json(r.s1_weighted, r.s1_weighted_float);
  j["M1"] = surd_json(r.m1, r.m1_float);
  j["S2"] = surd_json(r.s2, r.s2_float);
  j["M2"] = surd_json(r.m2, r.m2_float);
  j["D1"] = surd_json(r.d1, r.d1_float);
  j["D2"] = surd_json(r.d2, r.d2_float);
  j["D1_normalized"] = r.d1_normalized;
  j["D2_normalized"] = r.d2_normalized;
  j["S1_over_M1"] = r.s1_ratio;
  j["S2_over_M2"] = r.s2_ratio;
  j["nonvanishing_count"] = big(r.acc.nonvanishing_count);
  j["negative_count"] = big(r.acc.negative_count);
  j["min_central_value"] = central_json(r.acc.min_value);
  j["max_central_value"] = central_json(r.acc.max_value);

  const FirstMomentSplit& f = r.first_split;
  j["first_moment_split"] = {
      {"square_part", big(f.square_part)},
      {"square_part_expected", big(f.square_part_expected)},
      {"nonsquare", surd_json(f.nonsquare, f.nonsquare_float)},
      {"normalized_nonsquare", optional_float(f.normalized_nonsquare)},
      {"first_half", half_json(f.first_half)},
      {"second_half", half_json(f.second_half)},
  };
  const SecondMomentSplit& s = r.second_split;
  j["second_moment_split"] = {
      {"square_part", surd_json(s.square_part, s.square_float)},
      {"square_part_expected", surd_json(s.square_part_expected, s.square_part_expected.value(r.q))},
      {"nonsquare", surd_json(s.nonsquare, s.nonsquare_float)},
      {"normalized_nonsquare", optional_float(s.normalized_nonsquare)},
      {"square_over_main_term", optional_float(s.square_over_main_term)},
  };
  j["cauchy_schwarz"] = {{"holds", r.cauchy_schwarz_holds}, {"bound", r.cauchy_schwarz_bound}};
  j["checks"] = {
      {"square_part_checksum", r.checksum_holds},
      {"prime_count", r.prime_count_holds},
      {"first_moment_split", f.exact()},
      {"second_moment_split", s.exact()},
      {"cauchy_schwarz", r.cauchy_schwarz_holds},
  };
  json h = json::array();
  for (const auto& m : r.higher) h.push_back({{"k", m.k}, {"value", surd_json(m.value, m.value_float)}});
  j["higher_moments"] = std::move(h);
  j["accumulator"] = accumulator_json(r.acc);
  return j;
}

template <typename F>
auto parse_guarded(const std::string& text, const char* what, F&& f) {
  try {
    return f(json::parse(text));
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed ") + what + ": " + e.what());
  }
}

}  // namespace

std::string report_to_json(const SweepReport& report) { return report_json(report).dump(2) + "\n"; }

SweepReport report_from_json(const std::string& text) {
  return parse_guarded(text, "report", [](const json& j) {
    const MomentAccumulator acc = accumulator_parse(j.at("accumulator"));
    SweepReport r = make_report(acc, get_count(j, "candidates"));
    if (report_json(r) != j) throw UsageError("report fields are inconsistent with its accumulator");
    return r;
  });
}

std::string accumulator_to_json(const MomentAccumulator& acc) { return accumulator_json(acc).dump(); }

MomentAccumulator accumulator_from_json(const std::string& text) {
  return parse_guarded(text, "accumulator", [](const json& j) { return accumulator_parse(j); });
}

}  // namespace ffm
