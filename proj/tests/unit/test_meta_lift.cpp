#include "brute.hpp"
#include "doctest.h"
#include "ldl/colorings.hpp"
#include "ldl/generators.hpp"
#include "ldl/meta_lift.hpp"
#include "ldl/planar_mds.hpp"

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

LiftConfig planar_config(int T) {
  LiftConfig cfg;
  cfg.T = T;
  cfg.rho = 1;
  cfg.r = 6;
  return cfg;
}

}  // namespace

TEST_CASE("config round trip and validation") {
  LiftConfig cfg = planar_config(7);
  cfg.delta_cap = 40;
  const LiftConfig back = parse_lift_config(serialize(cfg));
  CHECK(back.T == 7);
  CHECK(back.rho == 1);
  CHECK(back.r == 6);
  CHECK(back.delta_cap == 40);
  CHECK(back.cls.name == "planar");
  CHECK(serialize(back) == serialize(cfg));
  CHECK_THROWS_AS(validate(planar_config(5)), InvalidInput);
  CHECK_THROWS_AS(parse_lift_config("T=7\nclass=toroidal\n"), InvalidInput);
}

TEST_CASE("meta_b on planar input returns the black-box output") {
  const LocalAlgorithm a = planar_mds();
  for (const Graph& g : {grid(5, 5), random_planar(40, 3)}) {
    const MetaResult res = meta_b(g, a, mds_problem(), planar_config(6));
    CHECK(res.solution == run(g, a));
    CHECK(res.report.error_set.empty());
    CHECK(res.report.patch.empty());
  }
}

TEST_CASE("meta_b repairs around K5") {
  const Graph g = generate("disjoint:complete:5;path:4");
  const MetaResult res = meta_b(g, planar_mds(), mds_problem(), planar_config(6));
  CHECK(res.report.error_set == VertexSet{0, 1, 2, 3, 4});
  CHECK(mds_problem().is_feasible(g, res.solution, g.vertex_set()));
  CHECK(res.solution.intersect(res.report.error_set).size() == 1);
  CHECK(res.report.delta == 1);
  CHECK(res.report.rounds == 6 + 1 + 2);
}

TEST_CASE("meta_b guards") {
  const Graph g = torus_grid(5, 5);
  LiftConfig tight = planar_config(6);
  tight.delta_cap = 1;
  CHECK_THROWS_AS(meta_b(g, planar_mds(), mds_problem(), tight), NicenessViolated);
  LocalProblem odd = mds_problem();
  odd.additive = false;
  CHECK_THROWS_AS(meta_b(g, planar_mds(), odd, planar_config(6)), AdditivityRequired);
  CHECK(meta_b(grid(3, 3), planar_mds(), odd, planar_config(6)).solution == run(grid(3, 3), planar_mds()));
}

TEST_CASE("genus_mds") {
  const Graph planar = random_planar(40, 8);
  for (GenusMode mode : {GenusMode::kMaskedGlobal, GenusMode::kLocalBall}) {
    CHECK(genus_mds(planar, 6, mode) == run(planar, planar_mds()));
  }
  for (const Graph& g : {torus_grid(4, 4), projective_circulant(1), projective_circulant(2)}) {
    for (int T : {1, 2, 4, 6}) {
      for (GenusMode mode : {GenusMode::kMaskedGlobal, GenusMode::kLocalBall}) {
        const GenusResult res = genus_mds_trace(g, T, mode);
        CHECK(mds_problem().is_feasible(g, res.solution, g.vertex_set()));
        CHECK(res.step_one.is_subset_of(res.solution));
      }
    }
  }
  const Graph m = projective_circulant(1);
  CHECK(genus_mds(m, 4).size() <= 7 * brute::opt(m, mds_problem()).size);
}

TEST_CASE("cut targets") {
  const Graph p9 = labelled_path(1, 9);
  CHECK(cut_around(p9, p9.vertex_set(), 1, mds_problem()) == p9);
  const VertexSet y = cut_targets(p9, {1, 9}, distance_ds_problem(2));
  CHECK(y.contains(1));
  CHECK(y.contains(9));
  CHECK(opt(induced(p9, y), distance_ds_problem(2)).size <= opt(p9, distance_ds_problem(2), {1, 9}, p9.vertex_set()).size);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = random_graph(9, 300, seed);
    SplitMix64 rng(seed);
    VertexSet x;
    for (Label v : g.labels()) {
      if (rng.below(3) == 0) x.insert(v);
    }
    for (const LocalProblem& p : {mds_problem(), ktuple_problem(2), distance_ds_problem(2)}) {
      const VertexSet all = g.vertex_set();
      std::size_t restricted = 0;
      try {
        restricted = brute::opt(g, p, x, all).size;
      } catch (const Infeasible&) {
        continue;
      }
      const VertexSet cut = cut_targets(g, x, p);
      CHECK(x.is_subset_of(cut));
      CHECK(brute::opt(induced(g, cut), p).size <= restricted);
    }
  }
}

TEST_CASE("uniformity") {
  const Graph t2 = tree_T_alpha(2);
  const LocalAlgorithm all{"all", 0, [](const BallView&) { return true; }};
  CHECK(uniformity_check(t2, all, mds_problem(), 0, Ratio{1, 1}, std::vector<VertexSet>{{}}).empty());
  const auto found = uniformity_check(t2, all, mds_problem(), 0, Ratio{2, 1}, std::vector<VertexSet>{tree_T_alpha_depth1(2)});
  REQUIRE(found.size() == 1);
  CHECK(found[0].lhs == 3);
  const Graph p6 = path(6);
  CHECK(uniformity_check(p6, planar_mds(), mds_problem(), 7, Ratio{205, 1}).empty());
}

TEST_CASE("additive wrapper") {
  CHECK(wrap_radius(1, Ratio{1, 1}) == 3);
  CHECK(wrap_radius(1, Ratio{1, 2}) == 6);
  const LocalAlgorithm none{"none", 1, [](const BallView&) { return false; }};
  const LocalAlgorithm w = wrap_additive(none, mds_problem(), Ratio{1, 1}, 1, Ratio{1, 1});
  CHECK(w.rounds == 4);
  CHECK(run(Graph::from_edges({3}, {}), w) == VertexSet{3});
  const Graph p4 = labelled_path(1, 4);
  const LocalAlgorithm wide = wrap_additive(none, mds_problem(), Ratio{1, 1}, 2, Ratio{1, 1});
  CHECK(run(p4, wide) == opt(p4, mds_problem()).witness);
  CHECK(run(cycle(50), w).empty());
}

TEST_CASE("balance") {
  const Graph p30 = path(30);
  const BoundedColoring col = path_coloring(p30, 3);
  const int f = max_class_diameter(p30, col.classes, 9);
  const auto out = balance_cover(p30, col.classes, 3, f);
  REQUIRE(out.size() == col.classes.size());
  for (const auto& c : out) CHECK(c.size() >= 15);
  CHECK(max_class_diameter(p30, out, 3) <= f + 6);
  const auto same = balance_cover(p30, col.classes, 1, max_class_diameter(p30, col.classes, 3));
  CHECK(same == col.classes);
  CHECK_THROWS_WITH_AS(balance_cover(p30, col.classes, 3, 0), "invalid control coloring", InvalidInput);
}
