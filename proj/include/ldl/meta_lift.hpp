#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ldl/local_sim.hpp"
#include "ldl/oracles.hpp"
#include "ldl/planarity.hpp"

namespace ldl {

/// Non-negative rational num/den with den > 0.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

struct LiftConfig {
  int T = 1;
  int rho = 1;
  int r = 1;
  int delta_cap = 64;
  ClassPredicate cls = planar_class();
};

/// Flat key=value lines: T, rho, r, delta_cap, class.
std::string serialize(const LiftConfig& cfg);
/// Inverse of serialize; the only known class name is "planar".
LiftConfig parse_lift_config(const std::string& text);
/// Throws InvalidInput unless T >= max(r, rho) and the other fields are sane.
void validate(const LiftConfig& cfg);

struct MetaReport {
  VertexSet error_set;
  /// run(g, a) minus the error set.
  VertexSet kept;
  /// Targets left unsatisfied by `kept`.
  VertexSet unsatisfied;
  /// Vertices added by the per-component brute force.
  VertexSet patch;
  std::vector<int> component_diameters;
  int delta = 0;
  int rounds = 0;
};

struct MetaResult {
  VertexSet solution;
  MetaReport report;
};

/// Runs a, drops the T-error set X, then repairs every unsatisfied target
/// near X with an exact solution per component of g[N^{2 rho}[X] + N^rho[U]].
/// Throws AdditivityRequired or NicenessViolated.
MetaResult meta_b(const Graph& g, const LocalAlgorithm& a, const LocalProblem& p, const LiftConfig& cfg);

enum class GenusMode {
  /// Run the planar algorithm on g and discard the T-error set.
  kMaskedGlobal,
  /// Every vertex with a planar T-ball runs the planar algorithm inside that ball.
  kLocalBall,
};

struct GenusResult {
  VertexSet solution;
  VertexSet step_one;
  VertexSet undominated;
  std::vector<VertexSet> hop_components;
};

GenusResult genus_mds_trace(const Graph& g, int T, GenusMode mode = GenusMode::kMaskedGlobal);
VertexSet genus_mds(const Graph& g, int T, GenusMode mode = GenusMode::kMaskedGlobal);

/// The augmented target set Y containing x with OPT(g[Y]) <= OPT(g, x).
/// Supports mds, k-tuple and distance-d problems.
VertexSet cut_targets(const Graph& g, const VertexSet& x, const LocalProblem& p);
/// g[cut_targets(g, N^k[s], p)].
Graph cut_around(const Graph& g, const VertexSet& s, int k, const LocalProblem& p);

struct Violation {
  VertexSet s;
  std::size_t lhs = 0;
  /// alpha * opt as a rational.
  Ratio rhs;
};

struct UniformityOptions {
  std::size_t samples = 256;
  /// Only subsets with |S| >= floor(min_frac * n) are tested when set.
  std::optional<Ratio> min_frac;
  std::uint64_t seed = 1;
};

/// Checks |run(g,a) & S| <= alpha * opt(g, p, N^k[S]) over every subset when
/// n <= 12, otherwise over seeded samples plus balls and spheres.
std::vector<Violation> uniformity_check(const Graph& g, const LocalAlgorithm& a, const LocalProblem& p, int k,
                                        Ratio alpha, const UniformityOptions& options = {});
/// Same test over the given subsets only.
std::vector<Violation> uniformity_check(const Graph& g, const LocalAlgorithm& a, const LocalProblem& p, int k,
                                        Ratio alpha, const std::vector<VertexSet>& subsets);

/// B = ceil(3 beta / eps).
int wrap_radius(int beta, Ratio eps);

/// Vertices whose component has diameter below B and lies inside their
/// radius-B view follow the component's lexicographically first optimum;
/// all others defer to a.
LocalAlgorithm wrap_additive(const LocalAlgorithm& a, const LocalProblem& p, Ratio alpha, int beta, Ratio eps);

/// Rebalances a cover so every class has at least floor(n/(d+1)) vertices
/// while r-hop components keep weak diameter <= f3r + 2r. Classes come back in
/// input order. Throws InvalidInput("invalid control coloring") when a 3r-hop
/// component of the input is wider than f3r.
std::vector<VertexSet> balance_cover(const Graph& g, const std::vector<VertexSet>& cover, int r, int f3r);

}  // namespace ldl
