// local-ds-lab: run, verify and sweep the LOCAL dominating-set algorithms.
//
//   local-ds-lab run gen=grid:4,4 algo=planar_mds
//   local-ds-lab verify colorings
//   local-ds-lab sweep family=grid:{k},{k} k=3..8 algos=planar_mds out=grids.csv

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ldl/harness.hpp"

namespace {
constexpr int kUsage = 64;
}

int main(int argc, char** argv) {
  CLI::App app{"LOCAL-model dominating set laboratory"};
  app.require_subcommand(1);

  std::vector<std::string> run_words;
  auto* run = app.add_subcommand("run", "Run one algorithm on one instance and emit a CSV row");
  run->add_option("params", run_words, "key=value pairs (gen, algo, T, rho, delta_cap, problem, beta, eps, mode, seed, timeout_ms, timing, out)")
      ->required();

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("suite", suite, "planar_ratio | cutting | uniformity | balance | colorings | oracles | niceness")
      ->required();

  std::vector<std::string> sweep_words;
  auto* sweep = app.add_subcommand("sweep", "Run a family of instances against several algorithms");
  sweep->add_option("params", sweep_words, "key=value pairs (family, k, algos, out, plus any run key)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*run) return ldl::cmd_run(ldl::parse_params(run_words), std::cout);
    if (*verify) {
      if (suite.rfind("suite=", 0) == 0) suite = suite.substr(6);
      return ldl::cmd_verify(suite, std::cout);
    }
    return ldl::cmd_sweep(ldl::parse_params(sweep_words), std::cout);
  } catch (const ldl::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
