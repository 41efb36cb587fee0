#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ldl/error.hpp"
#include "ldl/graph.hpp"

namespace ldl {

/// Bad command line: unknown key, algorithm, suite or generator.
class UsageError : public Error {
 public:
  using Error::Error;
};

enum class RunStatus { kOk, kInfeasible, kNicenessAbort, kFailed };

struct RunRecord {
  std::string instance;
  std::size_t n = 0;
  std::size_t m = 0;
  std::string algorithm;
  int rounds = 0;
  std::size_t solution_size = 0;
  /// Absent when the oracle timed out.
  std::optional<std::size_t> opt_size;
  std::size_t error_set_size = 0;
  int brute_component_max_diam = 0;
  std::uint64_t seed = 0;
  std::int64_t wall_ms = 0;
  RunStatus status = RunStatus::kOk;
  std::string message;
};

using Params = std::map<std::string, std::string>;

/// Parses key=value words; a repeated key keeps its last value.
Params parse_params(const std::vector<std::string>& words);

/// Header and row in column order instance,n,m,algorithm,rounds,
/// solution_size,opt_size,ratio,error_set_size,brute_component_max_diam,
/// seed,wall_ms. Ratios have six decimals; failed rows carry the status word
/// in place of the solution size.
std::string csv_header();
std::string csv_row(const RunRecord& r);

/// Builds the instance, runs the algorithm and the oracle, and fills a
/// record. Known keys: gen, algo, T, rho, delta_cap, problem, beta, eps,
/// mode, seed, timeout_ms, timing.
RunRecord execute(const Params& params);

/// Exit code for a record: 0 ok, 2 infeasible, 3 niceness abort, 1 other.
int exit_code(const RunRecord& r);

/// Writes the row to params["out"] (appending, header when the file is new)
/// or to `out` with a header.
int cmd_run(const Params& params, std::ostream& out);
/// Runs the named property suite, printing PASS/FAIL lines. 0 iff all pass.
int cmd_verify(const std::string& suite, std::ostream& out);
/// Expands family (with {k} replaced by every value of k=a..b) times algos
/// (comma separated) and writes one row per pair.
int cmd_sweep(const Params& params, std::ostream& out);

std::vector<std::string> suite_names();

}  // namespace ldl
