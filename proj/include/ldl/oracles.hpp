#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>

#include "ldl/error.hpp"
#include "ldl/graph.hpp"

namespace ldl {

/// Every shipped problem is a covering rule: target t is satisfied by a
/// selection S iff t is in S, or at least `demand` members of S lie at
/// distance 1..radius from t.
struct CoverRule {
  int radius = 1;
  int demand = 1;
};

struct LocalProblem {
  std::string name;
  int rho = 1;
  bool additive = true;
  CoverRule rule;
  std::function<bool(const Graph&, const VertexSet& selection, const VertexSet& targets)> is_feasible;
};

LocalProblem mds_problem();
LocalProblem ktuple_problem(int k);
LocalProblem distance_ds_problem(int d);

/// Whether `selection` satisfies the single target t under p's rule.
bool satisfies(const Graph& g, const LocalProblem& p, const VertexSet& selection, Label t);
/// Members of `targets` left unsatisfied by `selection`.
VertexSet unsatisfied(const Graph& g, const LocalProblem& p, const VertexSet& selection, const VertexSet& targets);

struct OptResult {
  std::size_t size = 0;
  /// Lexicographically smallest minimum solution.
  VertexSet witness;
};

class OracleTimeout : public Error {
 public:
  OracleTimeout() : Error("oracle timeout") {}
};

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

/// Minimum subset of `candidates` satisfying every target. Throws Infeasible
/// when no such subset exists and OracleTimeout once `deadline` has passed.
OptResult opt(const Graph& g, const LocalProblem& p, const VertexSet& targets, const VertexSet& candidates,
              Deadline deadline = std::nullopt);
/// Shorthand for targets = candidates = V(g).
OptResult opt(const Graph& g, const LocalProblem& p, Deadline deadline = std::nullopt);

/// Vertices v of h with N[v] strictly inside N[w] for some neighbour w.
VertexSet strictly_dominated(const Graph& h);

/// Lexicographically smallest minimum dominating set of `targets` in h among
/// those avoiding strictly dominated vertices.
VertexSet best_nice_mds(const Graph& h, const VertexSet& targets);

}  // namespace ldl
