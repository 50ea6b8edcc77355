#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ffm/bigint.hpp"
#include "ffm/lfunc.hpp"

namespace ffm {

/// (a + b sqrt(q)) / den with den > 0.
struct Surd {
  BigInt a = 0;
  BigInt b = 0;
  BigInt den = 1;

  double value(std::uint32_t q) const { return round15(surd_to_double(a, b, q, den)); }
  friend bool operator==(const Surd&, const Surd&) = default;
};

/// Exact running sums over a set of primes P of degree 2g+1. Central values
/// enter as the integer pair (X, Y) of L(1/2) = (X + Y sqrt(q)) / q^g, so every
/// field is an integer and merging is plain addition.
struct MomentAccumulator {
  std::uint32_t q = 0;
  int g = 0;
  int max_moment = 2;  // k = 3..max_moment are accumulated when > 2

  std::uint64_t prime_count = 0;
  BigInt sum_x, sum_y;        // first moment, units q^-g
  BigInt sum_sq_a, sum_sq_b;  // second moment, units q^-2g
  BigInt first_half_x, first_half_y;  // sum over deg f <= g only, units q^-g
  BigInt square_part_checksum;        // perfect-square f in both half sums, units 1
  BigInt first_half_square;           // same for the first half sum alone
  BigInt second_square_part;          // perfect-square f in L^2, units q^-2g
  std::uint64_t nonvanishing_count = 0;
  std::uint64_t negative_count = 0;
  std::optional<CentralValue> min_value, max_value;
  // higher[k-3] = sum of (X + Y sqrt(q))^k as (A, B), units q^-kg.
  std::vector<std::pair<BigInt, BigInt>> higher;

  MomentAccumulator() = default;
  MomentAccumulator(std::uint32_t q, int g, int max_moment = 2);

  /// r must come from a HalfSumEvaluator of the same (q, g). Throws
  /// ConsistencyError if its square part is not an integer.
  void add(const HalfSumEvaluator::Result& r);
  /// Componentwise sum; both sides must share (q, g, max_moment).
  void merge(const MomentAccumulator& other);

  friend bool operator==(const MomentAccumulator&, const MomentAccumulator&) = default;
};

struct HalfSplit {
  BigInt square;    // exact integer
  Surd nonsquare;
  double nonsquare_float = 0.0;
};

struct FirstMomentSplit {
  BigInt square_part;           // measured
  BigInt square_part_expected;  // (g+1) pi_A(2g+1)
  Surd nonsquare;
  double nonsquare_float = 0.0;
  /// |nonsquare| / (q^(3g/2) g / (2g+1)); absent for g = 0.
  std::optional<double> normalized_nonsquare;
  HalfSplit first_half;   // deg f <= g, square part (floor(g/2)+1) pi
  HalfSplit second_half;  // deg f <= g-1, square part (floor((g-1)/2)+1) pi
  bool exact() const { return square_part == square_part_expected; }
};

struct SecondMomentSplit {
  Surd square_part;           // measured, rational
  Surd square_part_expected;  // pi sum q^-m D2(m) over both ranges
  Surd nonsquare;
  double square_float = 0.0;
  double nonsquare_float = 0.0;
  /// |nonsquare| / (|P| g); absent for g = 0.
  std::optional<double> normalized_nonsquare;
  /// square part over pi (1 - 1/q)/12 (g(g+1)(2g+1) + (g-1)g(2g-1)); absent for g = 0.
  std::optional<double> square_over_main_term;
  bool exact() const { return square_part == square_part_expected; }
};

struct HigherMoment {
  int k = 0;
  Surd value;
  double value_float = 0.0;
};

/// Comparison of the accumulated moments with the main terms
/// M1 = |P| (g+1) and M2 = (1 - 1/q) |P| (2g+1)^2 / 24. All floats are
/// rounded to 15 significant digits from the exact fields.
struct SweepReport {
  std::uint32_t q = 0;
  int g = 0;
  BigInt norm;  // |P| = q^(2g+1)
  std::uint64_t candidates = 0;
  BigInt prime_count_expected;
  MomentAccumulator acc;

  Surd s1_unweighted, s1_weighted, m1, s2, m2, d1, d2;
  double s1_unweighted_float = 0, s1_weighted_float = 0, m1_float = 0, s2_float = 0, m2_float = 0;
  double d1_float = 0, d2_float = 0;
  double d1_normalized = 0;  // D1 / |P|^0.75
  double d2_normalized = 0;  // D2 / (|P| (2g+1))
  double s1_ratio = 0;       // S1 / M1
  double s2_ratio = 0;       // S2 / M2
  std::optional<double> min_value_float, max_value_float;

  FirstMomentSplit first_split;
  SecondMomentSplit second_split;

  bool cauchy_schwarz_holds = false;  // nonvanishing * S2 >= S1_unweighted^2, exact
  double cauchy_schwarz_bound = 0;    // S1_unweighted^2 / S2
  bool checksum_holds = false;        // square_part_checksum == (g+1) prime_count
  bool prime_count_holds = false;     // prime_count == pi_A(2g+1)

  std::vector<HigherMoment> higher;

  // Run metadata; printed but kept out of the JSON so reports are
  // reproducible byte for byte.
  double elapsed_seconds = 0;
  unsigned workers = 0;

  bool structural_checks_pass() const {
    return checksum_holds && prime_count_holds && first_split.exact() && second_split.exact() && cauchy_schwarz_holds;
  }
};

/// Derives every report field from a completed accumulator.
SweepReport make_report(const MomentAccumulator& acc, std::uint64_t candidates);

FirstMomentSplit first_moment_split(const MomentAccumulator& acc);
SecondMomentSplit second_moment_split(const MomentAccumulator& acc);

constexpr std::uint64_t kChunkSize = 4096;

/// Thrown when a sweep stops early through SweepOptions::halt_after_chunks;
/// the checkpoint on disk is consistent and can be resumed.
class SweepHalted : public std::runtime_error {
 public:
  explicit SweepHalted(std::uint64_t next_chunk)
      : std::runtime_error("sweep halted before chunk " + std::to_string(next_chunk)), next_chunk_(next_chunk) {}
  std::uint64_t next_chunk() const noexcept { return next_chunk_; }

 private:
  std::uint64_t next_chunk_;
};

struct SweepOptions {
  unsigned workers = 1;
  /// Resumed from when the file exists, rewritten after every committed chunk.
  std::optional<std::filesystem::path> checkpoint;
  /// Per-prime CSV dump.
  std::optional<std::filesystem::path> dump;
  int max_moment = 2;
  /// Stop after this many chunks have been committed in this call.
  std::optional<std::uint64_t> halt_after_chunks;
  std::function<void(std::uint64_t committed, std::uint64_t total)> progress;
};

/// Enumerates the monic polynomials of degree 2g+1 in chunks of kChunkSize
/// consecutive indices, keeps the irreducible ones and accumulates their
/// central values. Chunks are committed in index order regardless of which
/// worker finished first, so the result does not depend on scheduling.
SweepReport sweep(FieldSpec field, int g, const SweepOptions& options);

// JSON encodings. Exact integers are decimal strings.
std::string report_to_json(const SweepReport& report);
/// Rebuilds the report from its accumulator and checks every derived field
/// in the file against the recomputation; throws UsageError on mismatch.
SweepReport report_from_json(const std::string& text);

std::string accumulator_to_json(const MomentAccumulator& acc);
MomentAccumulator accumulator_from_json(const std::string& text);

struct TrendRow {
  int g = 0;
  std::uint64_t prime_count = 0;
  double s1_ratio = 0;
  double s2_ratio = 0;
  double d1_normalized = 0;
  double d2_normalized = 0;
  double nonvanishing_scaled = 0;  // nonvanishing (2g+1)^2 / |P|
  double cauchy_schwarz_bound = 0;
  std::uint64_t nonvanishing_count = 0;
  bool cauchy_schwarz_holds = false;
};

struct TrendTable {
  std::uint32_t q = 0;
  std::vector<TrendRow> rows;

  std::string to_text() const;
  std::string to_csv() const;
};

/// Needs at least two reports over the same q with distinct genera; rows
/// are ordered by g. UsageError otherwise.
TrendTable asymptotic_table(std::vector<SweepReport> reports);

}  // namespace ffm
