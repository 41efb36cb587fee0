#include "brute.hpp"
#include "doctest.h"
#include "ldl/generators.hpp"
#include "ldl/oracles.hpp"

using namespace ldl;

namespace {

Graph labelled_path(Label first, Label last) {
  std::vector<Label> labels;
  std::vector<Edge> edges;
  for (Label v = first; v <= last; ++v) {
    labels.push_back(v);
    if (v > first) edges.emplace_back(v - 1, v);
  }
  return Graph::from_edges(labels, edges);
}

}  // namespace

TEST_CASE("problem metadata") {
  CHECK(mds_problem().rho == 1);
  CHECK(ktuple_problem(3).rho == 1);
  CHECK(distance_ds_problem(3).rho == 3);
  CHECK(mds_problem().additive);
  CHECK_THROWS(ktuple_problem(0));
  CHECK_THROWS(distance_ds_problem(0));
}

TEST_CASE("feasibility") {
  const Graph p3 = labelled_path(1, 3);
  const LocalProblem mds = mds_problem();
  CHECK(mds.is_feasible(p3, {2}, p3.vertex_set()));
  CHECK(!mds.is_feasible(p3, {1}, p3.vertex_set()));
  CHECK(mds.is_feasible(p3, {1}, {1, 2}));
  CHECK(unsatisfied(p3, mds, {1}, p3.vertex_set()) == VertexSet{3});
  const LocalProblem two = ktuple_problem(2);
  CHECK(satisfies(p3, two, {1, 3}, 2));
  CHECK(!satisfies(p3, two, {1}, 2));
  CHECK(satisfies(p3, two, {2}, 2));
}

TEST_CASE("known optima") {
  const LocalProblem mds = mds_problem();
  CHECK(opt(Graph::from_edges({1}, {}), mds).size == 1);
  CHECK(opt(labelled_path(1, 3), mds).witness == VertexSet{2});
  CHECK(opt(cycle(4), ktuple_problem(2)).size == 2);
  CHECK(opt(tree_T_alpha(2), mds).size == 3);
  CHECK(opt(path(9), distance_ds_problem(2)).size == 2);
  CHECK(opt(grid(5, 5), mds).size == 7);
  const Graph g = random_planar(20, 1);
  CHECK(opt(g, mds, {}, g.vertex_set()).size == 0);
}

TEST_CASE("restricted candidates") {
  const Graph p3 = labelled_path(1, 3);
  CHECK(opt(p3, mds_problem(), p3.vertex_set(), {1, 3}).size == 2);
  CHECK_THROWS_AS(opt(p3, mds_problem(), {3}, {1}), Infeasible);
  CHECK(opt(path(2), ktuple_problem(3)).size == 2);
}

TEST_CASE("timeout") {
  const auto past = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  CHECK_THROWS_AS(opt(grid(12, 12), mds_problem(), past), OracleTimeout);
}

TEST_CASE("agrees with exhaustive search") {
  const std::vector<LocalProblem> problems{mds_problem(), ktuple_problem(2), distance_ds_problem(2)};
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const int n = 4 + static_cast<int>(seed % 9);
    const Graph g = random_graph(n, 150 + static_cast<int>(seed % 4) * 100, seed);
    SplitMix64 rng(seed * 7 + 1);
    VertexSet targets;
    VertexSet candidates;
    for (Label v : g.labels()) {
      if (rng.below(3) != 0) targets.insert(v);
      if (rng.below(4) != 0) candidates.insert(v);
    }
    for (const LocalProblem& p : problems) {
      const VertexSet all = g.vertex_set();
      const OptResult fast = opt(g, p);
      const OptResult slow = brute::opt(g, p);
      CHECK(fast.size == slow.size);
      CHECK(fast.witness == slow.witness);
      bool slow_ok = true;
      OptResult restricted_slow;
      try {
        restricted_slow = brute::opt(g, p, targets, candidates);
      } catch (const Infeasible&) {
        slow_ok = false;
      }
      if (slow_ok) {
        const OptResult restricted = opt(g, p, targets, candidates);
        CHECK(restricted.size == restricted_slow.size);
        CHECK(restricted.witness == restricted_slow.witness);
      } else {
        CHECK_THROWS_AS(opt(g, p, targets, candidates), Infeasible);
      }
    }
  }
}

TEST_CASE("nice dominating sets") {
  const Graph k2 = labelled_path(1, 2);
  CHECK(best_nice_mds(k2, k2.vertex_set()) == VertexSet{1});
  const Graph c4 = Graph::from_edges({1, 2, 3, 4}, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  CHECK(best_nice_mds(c4, c4.vertex_set()) == VertexSet{1, 2});
  const Graph p3 = labelled_path(1, 3);
  CHECK(strictly_dominated(p3) == VertexSet{1, 3});
  CHECK(best_nice_mds(p3, p3.vertex_set()) == VertexSet{2});
  CHECK(strictly_dominated(complete(4)).empty());
}
