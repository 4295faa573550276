// emc_lab: batch driver for the matching-bound toolkit. Subcommands run the
// lemma property suites, replay the shift algorithm on a family, tabulate
// the exhaustive oracles, print the bound, or fuzz the algorithm's claims.

#include <iostream>
#include <vector>

#include "CLI11.hpp"

#include "emc/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"verification lab for the Erdos matching bound"};
  app.require_subcommand(1);

  emc::cli::RunConfig cfg;
  std::vector<CLI::Option*> seed_opts, count_opts;

  auto add_common = [&](CLI::App* sub, bool need_seed) {
    sub->add_option("--n", cfg.n, "ground-set size (or grid/draw maximum)");
    sub->add_option("--k", cfg.k, "set size (or maximum)");
    sub->add_option("--s", cfg.s, "forbidden matching size (or maximum)");
    CLI::Option* seed = sub->add_option("--seed", cfg.seed, "master random seed");
    if (need_seed) seed->required();
    seed_opts.push_back(seed);
    count_opts.push_back(sub->add_option("--count", cfg.count, "number of cases / runs"));
    sub->add_option("--budget", cfg.budget,
                    "oracle step budget (0 = small-instance gate)");
    sub->add_flag("--paranoid", cfg.paranoid, "re-verify matching numbers every iteration");
    sub->add_option("--in", cfg.in_path, "input family file (text or JSON)");
    sub->add_option("--out", cfg.out_path, "output report file");
  };

  CLI::App* bound = app.add_subcommand("bound", "print the conjectured bound for (n,k,s)");
  add_common(bound, false);
  CLI::App* lemmas = app.add_subcommand("lemmas", "run the shift/matching property suites");
  add_common(lemmas, true);
  CLI::App* runc = app.add_subcommand("run", "run the algorithm on a family file");
  add_common(runc, false);
  CLI::App* oracle = app.add_subcommand("oracle", "tabulate exact f(n,k,s) by two methods");
  add_common(oracle, false);
  CLI::App* hunt = app.add_subcommand("hunt", "fuzz the algorithm's progress claims");
  add_common(hunt, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : emc::cli::kExitUsage;
  }

  for (CLI::Option* o : seed_opts) cfg.seed_set |= o->count() > 0;
  for (CLI::Option* o : count_opts) cfg.count_set |= o->count() > 0;

  if (bound->parsed()) return emc::cli::cmd_bound(cfg, std::cout, std::cerr);
  if (lemmas->parsed()) return emc::cli::cmd_lemmas(cfg, std::cout, std::cerr);
  if (runc->parsed()) return emc::cli::cmd_run(cfg, std::cout, std::cerr);
  if (oracle->parsed()) return emc::cli::cmd_oracle(cfg, std::cout, std::cerr);
  if (hunt->parsed()) return emc::cli::cmd_hunt(cfg, std::cout, std::cerr);
  return emc::cli::kExitUsage;
}
