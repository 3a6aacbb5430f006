// Command-line frontend. All substance lives in the headers; this file only
// parses flags into an ExperimentConfig and maps exceptions to exit codes:
//   0 success, 2 config error, 3 budget exhausted, 4 internal assertion.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sumsetlab/sumsetlab.hpp"

namespace {

using sumsetlab::ExperimentConfig;

void add_output_flags(CLI::App* cmd, ExperimentConfig& cfg) {
  cmd->add_option("--out", cfg.out, "Write the artifact to this file instead of stdout");
  cmd->add_option("--format", cfg.format, "Artifact format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--seed", cfg.seed, "RNG seed recorded in the artifact (default 0)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sumsetlab: restricted sumsets, critical numbers, and elliptic MDS codes"};
  app.require_subcommand(1);
  ExperimentConfig cfg;

  auto* sum = app.add_subcommand("sumset", "Compute restricted sumset layers Gamma_k(A)");
  sum->add_option("--group", cfg.group, "Group, e.g. Z7 or Z2xZ12")->required();
  sum->add_option("--set", cfg.set, "Comma-separated element indices")
      ->required()
      ->delimiter(',');
  sum->add_option("--kmax", cfg.kmax, "Largest layer to compute (default |A|)");
  add_output_flags(sum, cfg);

  auto* mu = app.add_subcommand("mu", "Critical number mu_k(G) by exhaustive search");
  mu->add_option("--group", cfg.group, "Group, e.g. Z8")->required();
  mu->add_option("--k", cfg.k, "Number of summands")->required();
  mu->add_option("--budget", cfg.budget, "Search node budget");
  add_output_flags(mu, cfg);

  auto* dich = app.add_subcommand("dichotomy", "mu_k table over a range of group orders");
  dich->add_option("--min-order", cfg.min_order, "Smallest group order")->required();
  dich->add_option("--max-order", cfg.max_order, "Largest group order")->required();
  dich->add_option("--kmin", cfg.kmin, "Smallest k (default 3)");
  dich->add_option("--kmax", cfg.kmax, "Largest k (default kmin)");
  dich->add_option("--budget", cfg.budget, "Per-record search node budget");
  add_output_flags(dich, cfg);

  auto* obs = app.add_subcommand("obstruct", "Scan a set for structured obstructions");
  obs->add_option("--group", cfg.group, "Group")->required();
  obs->add_option("--set", cfg.set, "Comma-separated element indices")
      ->required()
      ->delimiter(',');
  obs->add_option("--t", cfg.t, "Coset slack t (default 0)");
  add_output_flags(obs, cfg);

  auto* rep = app.add_subcommand("represent", "Constructive witness for target in Gamma_k(A)");
  rep->add_option("--group", cfg.group, "Group")->required();
  rep->add_option("--set", cfg.set, "Comma-separated element indices")
      ->required()
      ->delimiter(',');
  rep->add_option("--k", cfg.k, "Number of summands (>= 3)")->required();
  rep->add_option("--target", cfg.target, "Target element index")->required();
  rep->callback([&cfg] { cfg.has_target = true; });
  rep->add_option("--method", cfg.method, "Witness method: pair | fiber")
      ->check(CLI::IsMember({"pair", "fiber"}));
  rep->add_option("--qprime", cfg.qprime, "Quotient prime for the fiber method");
  add_output_flags(rep, cfg);

  auto* cur = app.add_subcommand("curve", "Enumerate an elliptic curve and its group structure");
  cur->add_option("--curve", cfg.curve, "Curve, e.g. p=13,a=1,b=1")->required();
  cur->add_flag("--orders", cfg.orders, "Include the order of every point");
  add_output_flags(cur, cfg);

  auto* mc = app.add_subcommand("mds-check", "Dual MDS verdict for one evaluation code");
  mc->add_option("--curve", cfg.curve, "Curve, e.g. p=13,a=1,b=1")->required();
  mc->add_option("--points", cfg.points, "Evaluation points, e.g. \"(0,1);(4,2);inf\"")
      ->required();
  mc->add_option("--qpoint", cfg.qpoint, "Divisor point Q, e.g. \"(10,6)\"")->required();
  mc->add_option("--k", cfg.k, "Code dimension")->required();
  add_output_flags(mc, cfg);

  auto* ms = app.add_subcommand("mds-search", "Heuristic sweep for large MDS evaluation sets");
  ms->add_option("--p-lo", cfg.p_lo, "Smallest prime (default 5)");
  ms->add_option("--p-hi", cfg.p_hi, "Largest prime (default 31)");
  ms->add_option("--curves-per-prime", cfg.curves_per_prime, "Curves sampled per prime");
  ms->add_option("--budget", cfg.budget, "Per-curve feasibility budget");
  add_output_flags(ms, cfg);

  auto* spot = app.add_subcommand("spot-theorem-a",
                                  "Threshold-scale random-set coverage check in Z_46320");
  spot->add_option("--sets", cfg.sets_count, "Number of random sets (default 20)");
  add_output_flags(spot, cfg);

  auto* ver = app.add_subcommand("verify", "Run the invariant suite");
  ver->add_option("--tier", cfg.tier, "fast (<= 60 s) or full")
      ->check(CLI::IsMember({"fast", "full"}));
  add_output_flags(ver, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  cfg.command = app.get_subcommands().front()->get_name();

  try {
    const sumsetlab::ExperimentResult res = sumsetlab::run_experiment(cfg);
    if (cfg.command == "verify") std::cerr << res.human << "\n";
    if (cfg.out.empty())
      std::cout << res.artifact;
    else
      std::cout << res.human << "\n";
    return res.exit_code;
  } catch (const sumsetlab::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const sumsetlab::BudgetExhausted& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return 3;
  } catch (const sumsetlab::InternalError& e) {
    std::cerr << "internal assertion: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
