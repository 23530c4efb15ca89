// e6geom: verification suites, chains and exact counts over F_p(sqrt d).

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "e6geom/cli.hpp"
#include "e6geom/errors.hpp"

namespace {

void add_common(CLI::App* cmd, e6geom::RunConfig& cfg) {
  cmd->add_option("--p", cfg.p, "prime p >= 5")->capture_default_str();
  cmd->add_option("--d", cfg.d, "non-square d mod p")->capture_default_str();
  cmd->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  cmd->add_option("--trials", cfg.trials, "samples per check (0: per-check defaults)")
      ->capture_default_str();
  cmd->add_option("--budget", cfg.budget, "chain trials per pair")->capture_default_str();
  cmd->add_option("--out", cfg.out, "write the JSON report here");
}

int emit(const e6geom::Report& report, const e6geom::RunConfig& cfg) {
  report.print_table(std::cout);
  if (!cfg.out.empty()) {
    std::ofstream out(cfg.out);
    if (!out) throw e6geom::ConfigError("cannot write " + cfg.out);
    out << report.dump();
  }
  return e6geom::exit_code(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the E6 incidence geometry over finite fields"};
  app.require_subcommand(1);

  e6geom::RunConfig cfg;
  std::string from = "random", to = "random", what = "special-intersection";

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  add_common(verify, cfg);
  verify->add_option("--suite", cfg.suite, "octonion|albert|brown|geometry|weyl|scope|all")
      ->capture_default_str();

  CLI::App* chain = app.add_subcommand("chain", "build a point-line-point-line-point chain");
  add_common(chain, cfg);
  chain->add_option("--from", from, "random, E1, E2, E3 or 27 entries a or a:b")
      ->capture_default_str();
  chain->add_option("--to", to, "as --from")->capture_default_str();

  CLI::App* count = app.add_subcommand("count", "exact enumerations");
  add_common(count, cfg);
  count->add_option("--what", what, "special-intersection|line-quadric")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*verify) return emit(e6geom::cmd_verify(cfg), cfg);
    if (*chain) return emit(e6geom::cmd_chain(cfg, from, to), cfg);
    return emit(e6geom::cmd_count(cfg, what), cfg);
  } catch (const e6geom::ConfigError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const e6geom::TooLarge& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
