#include <sstream>

#include "doctest.h"
#include "ldl/harness.hpp"

using namespace ldl;

TEST_CASE("params") {
  const Params p = parse_params({"gen=grid:3,3", "algo=planar_mds", "T=7", "T=8"});
  CHECK(p.at("gen") == "grid:3,3");
  CHECK(p.at("T") == "8");
  CHECK_THROWS_AS(parse_params({"oops"}), UsageError);
}

TEST_CASE("csv") {
  CHECK(csv_header() ==
        "instance,n,m,algorithm,rounds,solution_size,opt_size,ratio,error_set_size,brute_component_max_diam,seed,wall_ms");
  RunRecord r;
  r.instance = "grid:3,3";
  r.n = 9;
  r.m = 12;
  r.algorithm = "planar_mds";
  r.rounds = 6;
  r.solution_size = 4;
  r.opt_size = 3;
  CHECK(csv_row(r) == "\"grid:3,3\",9,12,planar_mds,6,4,3,1.333333,0,0,0,0");
  r.opt_size.reset();
  CHECK(csv_row(r).find(",timeout,") != std::string::npos);
}

TEST_CASE("execute and exit codes") {
  const RunRecord ok = execute(parse_params({"gen=grid:4,4", "algo=planar_mds"}));
  CHECK(ok.status == RunStatus::kOk);
  CHECK(exit_code(ok) == 0);
  CHECK(ok.n == 16);
  CHECK(ok.opt_size == std::optional<std::size_t>{4});
  const RunRecord lifted = execute(parse_params({"gen=disjoint:complete:5;path:4", "algo=meta_b:planar_mds", "T=6"}));
  CHECK(lifted.status == RunStatus::kOk);
  CHECK(lifted.error_set_size == 5);
  const RunRecord capped =
      execute(parse_params({"gen=torus_grid:5,5", "algo=meta_b:planar_mds", "T=6", "delta_cap=1"}));
  CHECK(exit_code(capped) == 3);
  CHECK_THROWS_AS(execute(parse_params({"gen=grid:4,4", "algo=nope"})), UsageError);
  CHECK_THROWS_AS(execute(parse_params({"gen=grid:4,4", "algo=planar_mds", "colour=blue"})), UsageError);
}

TEST_CASE("run and sweep output") {
  std::ostringstream out;
  CHECK(cmd_run(parse_params({"gen=path:5", "algo=planar_mds"}), out) == 0);
  CHECK(out.str().rfind(csv_header() + "\n", 0) == 0);
  std::ostringstream sweep;
  CHECK(cmd_sweep(parse_params({"family=path:{k}", "k=2..4", "algos=planar_mds,genus_mds"}), sweep) == 0);
  int lines = 0;
  for (char c : sweep.str()) lines += c == '\n';
  CHECK(lines == 7);
}

TEST_CASE("verify rejects unknown suites") {
  std::ostringstream out;
  CHECK_THROWS_AS(cmd_verify("no_such_suite", out), UsageError);
  CHECK(!suite_names().empty());
}
