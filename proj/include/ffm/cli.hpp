#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ffm/lfunc.hpp"

namespace ffm::cli {

enum class Command { VerifyIdentities, Lfunc, MomentsSweep, MomentsTable, Oracle };

enum class Method { Direct, HalfSum, PointCount };

/// Which sampled checks the oracle runs on each prime.
struct OracleChecks {
  bool route = true;                // halfsum = direct = point-count route
  bool functional_equation = true;  // full enumeration, cost q^(2g)
  bool second_moment = true;        // divisor-weighted identity, cost q^(2g)
  bool point_count = true;          // lpoly_from_counts = lpoly_direct
  bool rh = true;
  bool weil = true;

  /// Comma list over route, fe, divisor, pointcount, rh, weil or "all".
  static OracleChecks parse(const std::string& text);
  bool expensive() const { return functional_equation || second_moment; }
};

struct RunConfig {
  Command command = Command::VerifyIdentities;
  std::uint32_t q = 0;
  int genus = 0;
  int max_degree = 6;
  std::optional<int> divisor_max_degree;
  unsigned workers = 1;
  std::optional<std::filesystem::path> out, checkpoint, dump;
  std::vector<std::filesystem::path> inputs;
  bool json = false;
  bool csv = false;
  double rh_tol = 1e-9;
  std::uint64_t seed = 0;
  std::string poly;
  Method method = Method::HalfSum;
  bool full_enum = false;
  int count = 20;
  int max_moment = 2;
  OracleChecks checks;
};

/// Exit statuses of run and main_entry.
constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

/// Parses argv into a config. Returns nullopt after printing help or the
/// version. Throws UsageError (CLI parse failures included).
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out);

/// Validates q and output paths before doing any work, then dispatches.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run with every exception mapped onto the exit statuses.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

std::string version_string();

struct OracleOptions {
  std::uint32_t q = 5;
  int genus = 1;
  int count = 20;
  std::uint64_t seed = 0;
  double rh_tol = 1e-9;
  OracleChecks checks;
};

struct OracleRecord {
  explicit OracleRecord(Poly p) : prime(std::move(p)) {}

  Poly prime;
  bool route = true;
  bool functional_equation = true;
  bool second_moment = true;
  bool point_count = true;
  bool rh = true;
  bool weil = true;
  double rh_max_deviation = 0;
  /// Every intermediate value, filled when some check failed.
  std::string dump;

  bool passed() const { return route && functional_equation && second_moment && point_count && rh && weil; }
};

struct OracleResult {
  OracleOptions options;
  std::vector<OracleRecord> records;

  std::size_t passed_count() const;
  bool all_passed() const { return passed_count() == records.size(); }
};

/// Distinct primes of degree 2g+1 drawn by rejection from mt19937_64(seed);
/// the same seed always yields the same list.
std::vector<Poly> sample_primes(FieldSpec field, int genus, int count, std::uint64_t seed);

/// Throws UsageError when the q^(2g) checks are requested with g > 2.
OracleResult oracle_sample(const OracleOptions& options);

}  // namespace ffm::cli
