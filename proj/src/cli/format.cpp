#include "format.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace ffm::cli {

using json = nlohmann::ordered_json;

std::string fmt15(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string join(const std::vector<BigInt>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_decimal(v[i]);
  return s;
}

static json strings(const std::vector<BigInt>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_decimal(x));
  return a;
}

std::string method_name(Method m) {
  switch (m) {
    case Method::Direct: return "direct";
    case Method::HalfSum: return "halfsum";
    case Method::PointCount: return "pointcount";
  }
  return "?";
}

std::string lfunc_text(const LfuncOutput& o) {
  std::ostringstream os;
  os << "P = " << to_string(o.modulus) << " over F_" << o.modulus.q() << ", g = " << o.L.genus
     << ", method " << method_name(o.method) << "\n";
  os << "a_0..a_" << 2 * o.L.genus << " = " << join(o.L.coeffs) << "\n";
  if (o.counts) os << "N_1..N_" << o.counts->counts.size() << " = " << join(o.counts->counts) << "\n";
  os << "L(1/2) = (X + Y sqrt(q)) / q^g with X = " << o.value.x << ", Y = " << o.value.y << ", g = " << o.value.genus
     << "\n";
  os << "L(1/2) ~ " << fmt15(o.value.approx()) << "\n";
  if (o.roots) {
    os << "max | |u| sqrt(q) - 1 | = " << fmt15(o.roots->max_deviation) << " over " << o.roots->roots.size()
       << " distinct roots\n";
  }
  for (const auto& [name, ok] : o.verdicts) os << "  " << (ok ? "PASS " : "FAIL ") << name << "\n";
  return os.str();
}

std::string lfunc_json(const LfuncOutput& o) {
  json j;
  j["q"] = o.modulus.q();
  j["poly"] = to_string(o.modulus);
  j["g"] = o.L.genus;
  j["method"] = method_name(o.method);
  j["coefficients"] = strings(o.L.coeffs);
  j["point_counts"] = o.counts ? strings(o.counts->counts) : json(nullptr);
  j["X"] = to_decimal(o.value.x);
  j["Y"] = to_decimal(o.value.y);
  j["central_value"] = round15(o.value.approx());
  if (o.roots) {
    json moduli = json::array();
    for (double m : o.roots->moduli) moduli.push_back(round15(m));
    j["rh"] = {{"max_deviation", round15(o.roots->max_deviation)}, {"scaled_moduli", moduli}};
  } else {
    j["rh"] = nullptr;
  }
  json v;
  for (const auto& [name, ok] : o.verdicts) v[name] = ok;
  j["verdicts"] = v;
  return j.dump(2) + "\n";
}

std::string identities_text(std::uint32_t q, const std::vector<IdentityCheck>& checks) {
  std::ostringstream os;
  std::size_t passed = 0;
  os << "identity suite over F_" << q << "\n";
  for (const auto& c : checks) {
    passed += c.passed;
    char line[160];
    std::snprintf(line, sizeof line, "  %s  %-40s %6s  ", c.passed ? "PASS" : "FAIL", c.name.c_str(),
                  c.degree >= 0 ? ("n=" + std::to_string(c.degree)).c_str() : "");
    os << line << c.detail << "\n";
  }
  os << passed << "/" << checks.size() << " checks passed\n";
  return os.str();
}

std::string identities_json(std::uint32_t q, const std::vector<IdentityCheck>& checks) {
  json a = json::array();
  bool all = true;
  for (const auto& c : checks) {
    all = all && c.passed;
    a.push_back({{"name", c.name}, {"degree", c.degree >= 0 ? json(c.degree) : json(nullptr)}, {"passed", c.passed},
                 {"detail", c.detail}});
  }
  return json{{"q", q}, {"passed", all}, {"checks", a}}.dump(2) + "\n";
}

std::string sweep_summary(const SweepReport& r) {
  std::ostringstream os;
  auto flag = [](bool ok) { return ok ? "ok" : "FAILED"; };
  os << "q = " << r.q << ", g = " << r.g << ", |P| = " << r.norm << "\n";
  os << "primes            " << r.acc.prime_count << " of " << r.candidates << " candidates (expected "
     << r.prime_count_expected << ")\n";
  os << "S1 weighted       " << fmt15(r.s1_weighted_float) << "   M1 " << fmt15(r.m1_float) << "   S1/M1 "
     << fmt15(r.s1_ratio) << "\n";
  os << "S2                " << fmt15(r.s2_float) << "   M2 " << fmt15(r.m2_float) << "   S2/M2 " << fmt15(r.s2_ratio)
     << "\n";
  os << "D1/|P|^0.75       " << fmt15(r.d1_normalized) << "\n";
  os << "D2/(|P|(2g+1))    " << fmt15(r.d2_normalized) << "\n";
  os << "nonvanishing      " << r.acc.nonvanishing_count << " (S1^2/S2 = " << fmt15(r.cauchy_schwarz_bound)
     << "), negative " << r.acc.negative_count << "\n";
  if (r.min_value_float) {
    os << "central values in [" << fmt15(*r.min_value_float) << ", " << fmt15(*r.max_value_float) << "]\n";
  }
  os << "checks            square-part checksum " << flag(r.checksum_holds) << ", prime count "
     << flag(r.prime_count_holds) << ", first split " << flag(r.first_split.exact()) << ", second split "
     << flag(r.second_split.exact()) << ", Cauchy-Schwarz " << flag(r.cauchy_schwarz_holds) << "\n";
  for (const auto& h : r.higher) os << "moment k=" << h.k << "        " << fmt15(h.value_float) << "\n";
  char t[80];
  std::snprintf(t, sizeof t, "elapsed %.2f s with %u worker(s)\n", r.elapsed_seconds, r.workers);
  os << t;
  return os.str();
}

static std::vector<std::pair<const char*, bool>> enabled_checks(const OracleRecord& rec, const OracleChecks& c) {
  std::vector<std::pair<const char*, bool>> out;
  if (c.route) out.emplace_back("route", rec.route);
  if (c.functional_equation) out.emplace_back("fe", rec.functional_equation);
  if (c.second_moment) out.emplace_back("divisor", rec.second_moment);
  if (c.point_count) out.emplace_back("pointcount", rec.point_count);
  if (c.rh) out.emplace_back("rh", rec.rh);
  if (c.weil) out.emplace_back("weil", rec.weil);
  return out;
}

std::string oracle_text(const OracleResult& r) {
  std::ostringstream os;
  const auto& o = r.options;
  os << "oracle q = " << o.q << ", g = " << o.genus << ", count = " << o.count << ", seed = " << o.seed << "\n";
  for (const auto& rec : r.records) {
    os << "  " << (rec.passed() ? "PASS " : "FAIL ") << to_string(rec.prime);
    for (const auto& [name, ok] : enabled_checks(rec, o.checks)) os << "  " << name << (ok ? "=ok" : "=FAIL");
    if (o.checks.rh && o.genus > 0) os << "  rh_dev=" << fmt15(rec.rh_max_deviation);
    os << "\n";
    if (!rec.dump.empty()) os << rec.dump;
  }
  os << r.passed_count() << "/" << r.records.size() << " primes passed\n";
  return os.str();
}

std::string oracle_json(const OracleResult& r) {
  json recs = json::array();
  for (const auto& rec : r.records) {
    json j{{"poly", to_string(rec.prime)}, {"passed", rec.passed()}};
    for (const auto& [name, ok] : enabled_checks(rec, r.options.checks)) j[name] = ok;
    j["rh_max_deviation"] = round15(rec.rh_max_deviation);
    if (!rec.dump.empty()) j["dump"] = rec.dump;
    recs.push_back(j);
  }
  const auto& o = r.options;
  return json{{"q", o.q},
              {"g", o.genus},
              {"count", o.count},
              {"seed", o.seed},
              {"passed", r.all_passed()},
              {"records", recs}}
             .dump(2) +
         "\n";
}

}  // namespace ffm::cli
