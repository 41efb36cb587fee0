#include "brute.hpp"
#include "doctest.h"
#include "ldl/generators.hpp"
#include "ldl/oracles.hpp"
#include "ldl/planarity.hpp"

using namespace ldl;

TEST_CASE("split mix matches the reference recurrence") {
  std::uint64_t state = 1234567;
  auto reference = [&state] {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  };
  SplitMix64 rng(1234567);
  for (int i = 0; i < 8; ++i) CHECK(rng.next() == reference());
}

TEST_CASE("standard families") {
  CHECK(grid(1, 7) == path(7));
  const Graph t = torus_grid(3, 3);
  CHECK(t.order() == 9);
  CHECK(t.edge_count() == 18);
  for (int v = 0; v < 9; ++v) CHECK(t.degree(v) == 4);
  CHECK(!is_planar(complete(5)));
  CHECK(complete_bipartite(2, 3).edge_count() == 6);
  CHECK(star(4).degree(0) == 4);
  CHECK_THROWS(torus_grid(2, 5));
  CHECK_THROWS(path(0));
}

TEST_CASE("T_alpha") {
  CHECK(tree_T_alpha(1).order() == 7);
  for (int alpha = 1; alpha <= 3; ++alpha) {
    const Graph g = tree_T_alpha(alpha);
    CHECK(g.order() == static_cast<std::size_t>(1 + (alpha + 1) * (alpha * alpha + 2)));
    CHECK(components(g).size() == 1);
    CHECK(g.edge_count() == g.order() - 1);
  }
  const Graph t2 = tree_T_alpha(2);
  CHECK(opt(t2, mds_problem()).size == 3);
  CHECK(opt(t2, mds_problem(), tree_T_alpha_depth1(2), t2.vertex_set()).size == 1);
}

TEST_CASE("projective circulant") {
  const Graph g1 = projective_circulant(1);
  CHECK(g1.order() == 8);
  CHECK(g1.edge_count() == 12);
  CHECK(!is_planar(g1));
  CHECK(brute::has_kuratowski_subdivision(g1));
  for (int genus = 1; genus <= 4; ++genus) {
    const Graph g = projective_circulant(genus);
    for (int v = 0; v < static_cast<int>(g.order()); ++v) CHECK(g.degree(v) == 3);
  }
}

TEST_CASE("random generators are deterministic and connected") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Graph a = random_planar(40, s);
    CHECK(a == random_planar(40, s));
    CHECK(is_planar(a));
    CHECK(components(a).size() == 1);
    const Graph b = random_graph(10, 400, s);
    CHECK(b == random_graph(10, 400, s));
    CHECK(components(b).size() == 1);
    const Graph t = random_tree(15, s);
    CHECK(t.edge_count() == 14);
    CHECK(components(t).size() == 1);
  }
  CHECK(random_graph(8, 0, 3).edge_count() == 7);
  CHECK(random_graph(6, 1000, 3).edge_count() == 15);
}

TEST_CASE("torus grids are non-planar, cylinders are planar") {
  for (int m = 3; m <= 4; ++m) {
    for (int n = 3; n <= 4; ++n) {
      const Graph t = torus_grid(m, n);
      CHECK(!is_planar(t));
      // Drop the wrap edges of the rows: a cylinder.
      std::vector<Edge> kept;
      for (const auto& [a, b] : t.edges()) {
        const bool wrap = (a / n == b / n) && ((a % n == 0 && b % n == static_cast<Label>(n - 1)));
        if (!wrap) kept.push_back({a, b});
      }
      std::vector<Label> labels(t.labels().begin(), t.labels().end());
      CHECK(is_planar(Graph::from_edges(labels, kept)));
    }
  }
  CHECK(brute::has_kuratowski_subdivision(torus_grid(3, 3)));
}

TEST_CASE("generator specs") {
  CHECK(generate("torus_grid:4,6").order() == 24);
  const Graph d = generate("disjoint:complete:5;path:4");
  CHECK(d.order() == 9);
  CHECK(components(d).size() == 2);
  CHECK_THROWS_AS(generate("nonsense:3"), InvalidInput);
  CHECK_THROWS_AS(generate("grid:3"), InvalidInput);
  CHECK_THROWS_AS(generate("grid:3,x"), InvalidInput);
}
