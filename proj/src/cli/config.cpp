#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "ffm/cli.hpp"
#include "ffm/errors.hpp"

namespace ffm::cli {

std::string version_string() { return std::string("ffmoments ") + FFM_VERSION; }

OracleChecks OracleChecks::parse(const std::string& text) {
  if (text == "all") return {};
  OracleChecks c{false, false, false, false, false, false};
  std::stringstream ss(text);
  std::string item;
  bool any = false;
  while (std::getline(ss, item, ',')) {
    if (item == "route") c.route = true;
    else if (item == "fe") c.functional_equation = true;
    else if (item == "divisor") c.second_moment = true;
    else if (item == "pointcount") c.point_count = true;
    else if (item == "rh") c.rh = true;
    else if (item == "weil") c.weil = true;
    else throw UsageError("unknown oracle check '" + item + "' (expected route, fe, divisor, pointcount, rh, weil or all)");
    any = true;
  }
  if (!any) throw UsageError("empty oracle check list");
  return c;
}

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out) {
  RunConfig cfg;
  cfg.workers = std::max(1u, std::thread::hardware_concurrency());
  std::string method = "halfsum";
  std::string checks = "all";
  std::string checkpoint, dump, outpath;
  std::vector<std::string> inputs;

  CLI::App app{"Exact central values and moments of quadratic Dirichlet L-functions over F_q(T)", "ffmoments"};
  app.set_version_flag("--version", version_string());
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "Exact identity checks");
  verify->require_subcommand(1);
  auto* ident = verify->add_subcommand("identities", "Prime counts, divisor sums and residue symbols");
  ident->add_option("--q", cfg.q, "Field size, a prime = 1 mod 4")->required();
  ident->add_option("--max-degree", cfg.max_degree, "Largest degree for the prime counts")->check(CLI::Range(0, 16));
  ident->add_option("--divisor-max-degree", cfg.divisor_max_degree, "Largest degree for the divisor sums (default min(max-degree, 6))")
      ->check(CLI::Range(0, 12));
  ident->add_option("--seed", cfg.seed, "Seed for the random symbol pairs");
  ident->add_flag("--json", cfg.json, "Machine-readable output");

  auto* lfunc = app.add_subcommand("lfunc", "L-polynomial and central value of one prime");
  lfunc->add_option("--q", cfg.q, "Field size")->required();
  lfunc->add_option("--poly", cfg.poly, "Monic prime of odd degree, coefficients low to high")->required();
  lfunc->add_option("--method", method, "Evaluation route")->check(CLI::IsMember({"direct", "halfsum", "pointcount"}));
  lfunc->add_flag("--full-enum", cfg.full_enum, "Enumerate every degree up to 2g (direct method)");
  lfunc->add_option("--rh-tol", cfg.rh_tol, "Relative tolerance for root moduli")->check(CLI::PositiveNumber);
  lfunc->add_flag("--json", cfg.json, "Machine-readable output");

  auto* moments = app.add_subcommand("moments", "Exhaustive moment sweeps");
  moments->require_subcommand(1);
  auto* sweep = moments->add_subcommand("sweep", "Sweep every prime of degree 2g+1");
  sweep->add_option("--q", cfg.q, "Field size")->required();
  sweep->add_option("--genus", cfg.genus, "Genus g")->required()->check(CLI::Range(0, 12));
  sweep->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::Range(1u, 1024u));
  sweep->add_option("--checkpoint", checkpoint, "Checkpoint file, resumed from when present");
  sweep->add_option("--out", outpath, "Report JSON path");
  sweep->add_option("--dump-primes", dump, "Per-prime CSV path");
  sweep->add_option("--max-moment", cfg.max_moment, "Also accumulate moments k = 3..K")->check(CLI::Range(2, 16));
  auto* table = moments->add_subcommand("table", "Trend table over several reports");
  table->add_option("--inputs", inputs, "Report JSON files")->required();
  table->add_flag("--csv", cfg.csv, "CSV instead of text");

  auto* oracle = app.add_subcommand("oracle", "Sampled cross-route oracles");
  oracle->add_option("--q", cfg.q, "Field size")->required();
  oracle->add_option("--genus", cfg.genus, "Genus g")->required()->check(CLI::Range(0, 12));
  oracle->add_option("--count", cfg.count, "Number of sampled primes")->check(CLI::NonNegativeNumber);
  oracle->add_option("--seed", cfg.seed, "Sampling seed");
  oracle->add_option("--checks", checks, "Comma list of route, fe, divisor, pointcount, rh, weil, or all");
  oracle->add_option("--rh-tol", cfg.rh_tol, "Relative tolerance for root moduli")->check(CLI::PositiveNumber);
  oracle->add_flag("--json", cfg.json, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::CallForVersion&) {
    out << version_string() << "\n";
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (ident->parsed()) {
    cfg.command = Command::VerifyIdentities;
  } else if (lfunc->parsed()) {
    cfg.command = Command::Lfunc;
    cfg.method = method == "direct" ? Method::Direct : method == "pointcount" ? Method::PointCount : Method::HalfSum;
  } else if (sweep->parsed()) {
    cfg.command = Command::MomentsSweep;
  } else if (table->parsed()) {
    cfg.command = Command::MomentsTable;
  } else {
    cfg.command = Command::Oracle;
    cfg.checks = OracleChecks::parse(checks);
  }
  if (!checkpoint.empty()) cfg.checkpoint = checkpoint;
  if (!dump.empty()) cfg.dump = dump;
  if (!outpath.empty()) cfg.out = outpath;
  for (const auto& p : inputs) cfg.inputs.emplace_back(p);
  return cfg;
}

}  // namespace ffm::cli
