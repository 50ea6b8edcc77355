#include <algorithm>
#include <cstdio>
#include <sstream>

#include "ffm/errors.hpp"
#include "ffm/moments.hpp"

namespace ffm {

TrendTable asymptotic_table(std::vector<SweepReport> reports) {
  if (reports.size() < 2) throw UsageError("trend table needs at least two reports");
  const std::uint32_t q = reports.front().q;
  for (const auto& r : reports) {
    if (r.q != q) {
      throw UsageError("trend table mixes q = " + std::to_string(q) + " and q = " + std::to_string(r.q));
    }
  }
  std::sort(reports.begin(), reports.end(), [](const SweepReport& a, const SweepReport& b) { return a.g < b.g; });
  for (std::size_t i = 1; i < reports.size(); ++i) {
    if (reports[i].g == reports[i - 1].g) throw UsageError("two reports for g = " + std::to_string(reports[i].g));
  }

  TrendTable t;
  t.q = q;
  for (const auto& r : reports) {
    const int w = 2 * r.g + 1;
    TrendRow row;
    row.g = r.g;
    row.prime_count = r.acc.prime_count;
    row.s1_ratio = r.s1_ratio;
    row.s2_ratio = r.s2_ratio;
    row.d1_normalized = r.d1_normalized;
    row.d2_normalized = r.d2_normalized;
    row.nonvanishing_scaled = round15(static_cast<double>(r.acc.nonvanishing_count) * w * w / static_cast<double>(r.norm));
    row.cauchy_schwarz_bound = r.cauchy_schwarz_bound;
    row.nonvanishing_count = r.acc.nonvanishing_count;
    row.cauchy_schwarz_holds = r.cauchy_schwarz_holds;
    t.rows.push_back(row);
  }
  return t;
}

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

}  // namespace

std::string TrendTable::to_text() const {
  std::ostringstream os;
  char line[256];
  os << "q = " << q << "\n";
  std::snprintf(line, sizeof line, "%3s %10s %17s %17s %17s %17s %17s %17s %11s %3s\n", "g", "primes", "S1/M1", "S2/M2",
                "D1/|P|^0.75", "D2/(|P|(2g+1))", "nv(2g+1)^2/|P|", "S1^2/S2", "nonvanish", "CS");
  os << line;
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%3d %10llu %17s %17s %17s %17s %17s %17s %11llu %3s\n", r.g,
                  static_cast<unsigned long long>(r.prime_count), fmt(r.s1_ratio).c_str(), fmt(r.s2_ratio).c_str(),
                  fmt(r.d1_normalized).c_str(), fmt(r.d2_normalized).c_str(), fmt(r.nonvanishing_scaled).c_str(),
                  fmt(r.cauchy_schwarz_bound).c_str(), static_cast<unsigned long long>(r.nonvanishing_count),
                  r.cauchy_schwarz_holds ? "ok" : "NO");
    os << line;
  }
  return os.str();
}

std::string TrendTable::to_csv() const {
  std::ostringstream os;
  os << "q,g,prime_count,S1_over_M1,S2_over_M2,D1_normalized,D2_normalized,nonvanishing_scaled,"
        "cauchy_schwarz_bound,nonvanishing_count,cauchy_schwarz_holds\n";
  for (const auto& r : rows) {
    os << q << ',' << r.g << ',' << r.prime_count << ',' << fmt(r.s1_ratio) << ',' << fmt(r.s2_ratio) << ','
       << fmt(r.d1_normalized) << ',' << fmt(r.d2_normalized) << ',' << fmt(r.nonvanishing_scaled) << ','
       << fmt(r.cauchy_schwarz_bound) << ',' << r.nonvanishing_count << ',' << (r.cauchy_schwarz_holds ? "true" : "false")
       << '\n';
  }
  return os.str();
}

}  // namespace ffm
