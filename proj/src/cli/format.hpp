#pragma once

#include <string>
#include <vector>

#include "ffm/bigint.hpp"
#include "ffm/cli.hpp"
#include "ffm/identities.hpp"
#include "ffm/moments.hpp"

namespace ffm::cli {

std::string fmt15(double v);
std::string join(const std::vector<BigInt>& v);

struct LfuncOutput {
  Poly modulus;
  Method method;
  LPolynomial L;
  CentralValue value;
  std::vector<std::pair<std::string, bool>> verdicts;
  std::optional<RootReport> roots;
  std::optional<PointCounts> counts;
};

std::string method_name(Method m);
std::string lfunc_text(const LfuncOutput& o);
std::string lfunc_json(const LfuncOutput& o);

std::string identities_text(std::uint32_t q, const std::vector<IdentityCheck>& checks);
std::string identities_json(std::uint32_t q, const std::vector<IdentityCheck>& checks);

std::string sweep_summary(const SweepReport& r);

std::string oracle_text(const OracleResult& r);
std::string oracle_json(const OracleResult& r);

}  // namespace ffm::cli
