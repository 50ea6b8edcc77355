#include <random>
#include <set>
#include <sstream>

#include "ffm/arith.hpp"
#include "ffm/cli.hpp"
#include "ffm/errors.hpp"
#include "format.hpp"

namespace ffm::cli {

std::size_t OracleResult::passed_count() const {
  std::size_t n = 0;
  for (const auto& r : records) n += r.passed();
  return n;
}

std::vector<Poly> sample_primes(FieldSpec field, int genus, int count, std::uint64_t seed) {
  if (genus < 0) throw UsageError("genus must be non-negative");
  if (count < 0) throw UsageError("count must be non-negative");
  const int degree = 2 * genus + 1;
  if (BigInt(count) > count_primes(field, degree)) {
    throw UsageError("only " + to_decimal(count_primes(field, degree)) + " primes of degree " +
                     std::to_string(degree) + " exist, cannot sample " + std::to_string(count));
  }
  std::mt19937_64 rng(seed);
  std::set<std::uint64_t> seen;
  std::vector<Poly> out;
  while (static_cast<int>(out.size()) < count) {
    Poly::Coeffs c(static_cast<std::size_t>(degree) + 1);
    for (auto& v : c) v = static_cast<std::uint32_t>(rng() % field.q());
    c[degree] = 1;
    Poly P(field, std::move(c));
    if (!is_irreducible(P) || !seen.insert(monic_index(P)).second) continue;
    out.push_back(std::move(P));
  }
  return out;
}

namespace {

std::string describe(const Poly& P, const LPolynomial& direct, const std::optional<LPolynomial>& from_counts,
                     const std::optional<PointCounts>& counts, const CentralValue& half, const std::string& errors) {
  std::ostringstream os;
  os << "    prime            " << to_string(P) << "\n";
  os << "    lpoly_direct     " << join(direct.coeffs) << "\n";
  if (from_counts) os << "    lpoly_from_counts " << join(from_counts->coeffs) << "\n";
  if (counts) os << "    point counts     " << join(counts->counts) << "\n";
  const CentralValue dv = central_value(direct);
  os << "    halfsum (X, Y)   " << half.x << ", " << half.y << "\n";
  os << "    direct (X, Y)    " << dv.x << ", " << dv.y << "\n";
  if (!errors.empty()) os << "    errors           " << errors << "\n";
  return os.str();
}

}  // namespace

OracleResult oracle_sample(const OracleOptions& opt) {
  const FieldSpec field(opt.q);
  const int g = opt.genus;
  if (g < 0) throw UsageError("genus must be non-negative");
  if (g > 2 && opt.checks.expensive()) {
    throw UsageError("the full-enumeration and divisor-sum oracles enumerate all q^(2g) = " +
                     to_decimal(pow_big(opt.q, 2 * g)) + " monic polynomials per prime; they are limited to g <= 2 "
                     "(run --checks route,pointcount,rh,weil for larger genus)");
  }
  const std::vector<Poly> primes = sample_primes(field, g, opt.count, opt.seed);
  OracleResult result{opt, {}};
  if (primes.empty()) return result;

  const HalfSumEvaluator evaluator(field, g);
  const int m = std::max(2 * g, 1);
  const PointCounter counter(field, m);

  for (const Poly& P : primes) {
    OracleRecord rec(P);
    std::string errors;
    const LPolynomial direct = lpoly_direct(P);
    const CentralValue half = evaluator.evaluate(P).value;
    std::optional<PointCounts> counts;
    std::optional<LPolynomial> from_counts;
    const auto& c = opt.checks;

    if (c.route || c.point_count || c.weil) {
      counts = counter.count(P);
      try {
        from_counts = lpoly_from_counts(*counts, g);
      } catch (const ConsistencyError& e) {
        errors += e.what();
      }
    }
    if (c.route) {
      rec.route = half == central_value(direct) && from_counts && half == central_value(*from_counts);
    }
    if (c.point_count) {
      rec.point_count = from_counts && from_counts->coeffs == direct.coeffs &&
                        counts_from_lpoly(direct, m).counts == counts->counts;
    }
    if (c.weil) rec.weil = weil_bound_holds(*counts, g);
    if (c.functional_equation) {
      const LPolynomial full = lpoly_direct(P, true);
      rec.functional_equation = satisfies_functional_equation(full) && full.coeffs == direct.coeffs;
    }
    if (c.second_moment) rec.second_moment = second_moment_identity(P).holds();
    if (c.rh && g > 0) {
      try {
        const RootReport roots = rh_check(direct, opt.rh_tol);
        rec.rh = roots.passed;
        rec.rh_max_deviation = roots.max_deviation;
      } catch (const NumericalError& e) {
        rec.rh = false;
        errors += e.what();
      }
    }
    if (!rec.passed()) rec.dump = describe(P, direct, from_counts, counts, half, errors);
    result.records.push_back(std::move(rec));
  }
  return result;
}

}  // namespace ffm::cli
