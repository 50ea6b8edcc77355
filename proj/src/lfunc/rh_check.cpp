#include <cmath>
#include <complex>
#include <sstream>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "ffm/errors.hpp"
#include "ffm/lfunc.hpp"

namespace ffm {

namespace {

using boost::multiprecision::cpp_bin_float_50;
using boost::multiprecision::cpp_rational;
using RatPoly = std::vector<cpp_rational>;  // low-to-high, no trailing zeros

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly rat_rem(RatPoly a, const RatPoly& b) {
  const int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const cpp_rational c = a.back() / b.back();
    const int shift = static_cast<int>(a.size()) - 1 - db;
    for (int j = 0; j <= db; ++j) a[shift + j] -= c * b[j];
    trim(a);
  }
  return a;
}

RatPoly rat_quot(RatPoly a, const RatPoly& b) {
  const int db = static_cast<int>(b.size()) - 1;
  const int da = static_cast<int>(a.size()) - 1;
  RatPoly q(da - db + 1);
  for (int top = da; top >= db; --top) {
    const cpp_rational c = a[top] / b.back();
    q[top - db] = c;
    for (int j = 0; j <= db; ++j) a[top - db + j] -= c * b[j];
  }
  return q;
}

RatPoly rat_gcd(RatPoly a, RatPoly b) {
  while (!b.empty()) {
    RatPoly r = rat_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  const cpp_rational lead = a.back();
  for (auto& c : a) c /= lead;
  return a;
}

std::string describe(const LPolynomial& L) {
  std::ostringstream os;
  os << "L-polynomial of " << to_string(L.modulus) << " with coefficients [";
  for (std::size_t i = 0; i < L.coeffs.size(); ++i) os << (i ? "," : "") << L.coeffs[i];
  os << "]";
  return os.str();
}

}  // namespace

RootReport rh_check(const LPolynomial& L, double tol) {
  if (L.genus < 1) throw DomainError("RH check needs genus >= 1");
  const std::uint32_t q = L.field().q();

  RatPoly p(L.coeffs.begin(), L.coeffs.end());
  trim(p);
  RatPoly dp;
  for (std::size_t i = 1; i < p.size(); ++i) dp.push_back(p[i] * static_cast<int>(i));
  const RatPoly sf = rat_quot(p, rat_gcd(p, dp));
  const int d = static_cast<int>(sf.size()) - 1;

  // In z = u sqrt(q) the roots should lie on the unit circle.
  using cld = std::complex<long double>;
  std::vector<long double> zc(d + 1);
  const cpp_bin_float_50 sq = boost::multiprecision::sqrt(cpp_bin_float_50(q));
  cpp_bin_float_50 scale = 1;
  for (int k = 0; k <= d; ++k) {
    zc[k] = static_cast<long double>(cpp_bin_float_50(sf[k]) / scale);
    scale *= sq;
  }
  const long double lead = zc[d];
  for (auto& c : zc) c /= lead;

  RootReport report;
  report.square_free_degree = d;
  if (d == 0) {
    report.passed = true;
    return report;
  }

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -static_cast<double>(zc[i]);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw NumericalError("eigenvalue solver did not converge for " + describe(L));

  auto eval = [&](cld z, cld& deriv) {
    cld v = zc[d];
    deriv = 0;
    for (int k = d - 1; k >= 0; --k) {
      deriv = deriv * z + v;
      v = v * z + zc[k];
    }
    return v;
  };

  const long double root_q = std::sqrt(static_cast<long double>(q));
  for (int i = 0; i < d; ++i) {
    cld z(solver.eigenvalues()[i].real(), solver.eigenvalues()[i].imag());
    for (int it = 0; it < 60; ++it) {
      cld dv;
      const cld v = eval(z, dv);
      if (std::abs(dv) == 0) break;
      const cld step = v / dv;
      z -= step;
      if (std::abs(step) <= 1e-18L * std::max<long double>(1, std::abs(z))) break;
    }
    cld dv;
    const long double residual = std::abs(eval(z, dv));
    if (!(residual < 1e-9L) || !std::isfinite(static_cast<double>(std::abs(z)))) {
      throw NumericalError("root refinement did not converge (residual " + std::to_string(static_cast<double>(residual)) +
                           ") for " + describe(L));
    }
    const double modulus = static_cast<double>(std::abs(z));
    report.roots.emplace_back(static_cast<double>(z.real() / root_q), static_cast<double>(z.imag() / root_q));
    report.moduli.push_back(modulus);
    report.max_deviation = std::max(report.max_deviation, std::abs(modulus - 1.0));
  }
  report.passed = report.max_deviation <= tol;
  return report;
}

}  // namespace ffm
