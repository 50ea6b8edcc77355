#include <unistd.h>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ffm/arith.hpp"
#include "ffm/cli.hpp"
#include "ffm/errors.hpp"
#include "ffm/identities.hpp"
#include "ffm/moments.hpp"
#include "format.hpp"

namespace ffm::cli {

namespace {

namespace fs = std::filesystem;

void ensure_writable(const fs::path& path, const char* what) {
  const fs::path parent = path.has_parent_path() ? path.parent_path() : fs::path(".");
  if (!fs::is_directory(parent)) {
    throw UsageError(std::string(what) + " directory " + parent.string() + " does not exist");
  }
  if (fs::is_directory(path)) throw UsageError(std::string(what) + " path " + path.string() + " is a directory");
  if (fs::exists(path) ? ::access(path.c_str(), W_OK) != 0 : ::access(parent.c_str(), W_OK) != 0) {
    throw UsageError(std::string(what) + " path " + path.string() + " is not writable");
  }
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int verify_identities(const RunConfig& cfg, FieldSpec field, std::ostream& out) {
  IdentitySuiteOptions opts;
  opts.prime_max_degree = cfg.max_degree;
  opts.divisor_max_degree = cfg.divisor_max_degree.value_or(std::min(cfg.max_degree, 6));
  opts.seed = cfg.seed;
  const auto checks = run_identity_suite(field, opts);
  out << (cfg.json ? identities_json(field.q(), checks) : identities_text(field.q(), checks));
  for (const auto& c : checks) {
    if (!c.passed) return kExitFail;
  }
  return kExitPass;
}

int lfunc(const RunConfig& cfg, FieldSpec field, std::ostream& out) {
  const Poly P = parse_poly(field, cfg.poly, true);
  const int g = genus_of(P);
  if (cfg.full_enum && cfg.method != Method::Direct) throw UsageError("--full-enum applies to --method direct only");

  LfuncOutput o{P, cfg.method, {P, g, {}}, {}, {}, {}, {}};
  switch (cfg.method) {
    case Method::Direct:
      o.L = lpoly_direct(P, cfg.full_enum);
      o.value = central_value(o.L);
      break;
    case Method::HalfSum: {
      const HalfSumEvaluator eval(field, g);
      const auto r = eval.evaluate(P);
      o.value = r.value;
      o.L.coeffs.assign(2 * g + 1, 0);
      const auto a = eval.character_sums(P);
      for (int n = 0; n <= g; ++n) o.L.coeffs[n] = a[n];
      for (int n = g + 1; n <= 2 * g; ++n) o.L.coeffs[n] = pow_big(field.q(), n - g) * o.L.coeffs[2 * g - n];
      o.verdicts.emplace_back("square_part_equals_g_plus_1",
                              BigInt(r.square_scaled) == (g + 1) * pow_big(field.q(), g));
      o.verdicts.emplace_back("value_matches_coefficients", central_value(o.L) == o.value);
      break;
    }
    case Method::PointCount:
      o.counts = point_counts(P, std::max(2 * g, 1));
      o.L = lpoly_from_counts(*o.counts, g);
      o.value = central_value(o.L);
      o.verdicts.emplace_back("weil_bound", weil_bound_holds(*o.counts, g));
      o.verdicts.emplace_back("counts_round_trip", counts_from_lpoly(o.L, std::max(2 * g, 1)).counts == o.counts->counts);
      break;
  }
  o.verdicts.emplace_back(cfg.full_enum ? "functional_equation" : "functional_equation_filled",
                          satisfies_functional_equation(o.L));
  if (g > 0) {
    o.roots = rh_check(o.L, cfg.rh_tol);
    o.verdicts.emplace_back("riemann_hypothesis", o.roots->passed);
  }
  out << (cfg.json ? lfunc_json(o) : lfunc_text(o));
  for (const auto& [name, ok] : o.verdicts) {
    if (!ok) return kExitFail;
  }
  return kExitPass;
}

int moments_sweep(const RunConfig& cfg, FieldSpec field, std::ostream& out, std::ostream& err) {
  if (cfg.out) ensure_writable(*cfg.out, "report");
  if (cfg.checkpoint) ensure_writable(*cfg.checkpoint, "checkpoint");
  if (cfg.dump) ensure_writable(*cfg.dump, "dump");
  SweepOptions opt;
  opt.workers = cfg.workers;
  opt.checkpoint = cfg.checkpoint;
  opt.dump = cfg.dump;
  opt.max_moment = cfg.max_moment;
  const SweepReport report = sweep(field, cfg.genus, opt);
  out << sweep_summary(report);
  if (cfg.out) {
    std::ofstream f(*cfg.out, std::ios::binary | std::ios::trunc);
    f << report_to_json(report);
    f.close();
    if (!f) throw std::runtime_error("failed writing report " + cfg.out->string());
    out << "report written to " << cfg.out->string() << "\n";
  }
  if (!report.structural_checks_pass()) {
    err << "structural checks failed\n";
    return kExitFail;
  }
  return kExitPass;
}

int moments_table(const RunConfig& cfg, std::ostream& out) {
  std::vector<SweepReport> reports;
  for (const auto& p : cfg.inputs) {
    try {
      reports.push_back(report_from_json(read_file(p)));
    } catch (const UsageError& e) {
      throw UsageError(p.string() + ": " + e.what());
    }
  }
  const TrendTable t = asymptotic_table(std::move(reports));
  out << (cfg.csv ? t.to_csv() : t.to_text());
  for (const auto& r : t.rows) {
    if (!r.cauchy_schwarz_holds) return kExitFail;
  }
  return kExitPass;
}

int oracle(const RunConfig& cfg, std::ostream& out) {
  OracleOptions opt;
  opt.q = cfg.q;
  opt.genus = cfg.genus;
  opt.count = cfg.count;
  opt.seed = cfg.seed;
  opt.rh_tol = cfg.rh_tol;
  opt.checks = cfg.checks;
  const OracleResult r = oracle_sample(opt);
  out << (cfg.json ? oracle_json(r) : oracle_text(r));
  return r.all_passed() ? kExitPass : kExitFail;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.command == Command::MomentsTable) return moments_table(cfg, out);
  const FieldSpec field(cfg.q);
  switch (cfg.command) {
    case Command::VerifyIdentities: return verify_identities(cfg, field, out);
    case Command::Lfunc: return lfunc(cfg, field, out);
    case Command::MomentsSweep: return moments_sweep(cfg, field, out, err);
    case Command::Oracle: return oracle(cfg, out);
    case Command::MomentsTable: break;
  }
  return kExitPass;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    const auto cfg = parse_args(argc, argv, out);
    if (!cfg) return kExitPass;
    return run(*cfg, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << "\n";
    return kExitFail;
  }
}

}  // namespace ffm::cli
