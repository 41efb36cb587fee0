#include "doctest.h"
#include "ldl/generators.hpp"
#include "ldl/planar_mds.hpp"

using namespace ldl;

TEST_CASE("tiny instances") {
  const Graph k1 = Graph::from_edges({4}, {});
  CHECK(run(k1, planar_mds()) == VertexSet{4});
  CHECK(run(star(5), planar_mds()) == VertexSet{0});
  const PlanarRatio r = verify_planar_ratio(star(5));
  CHECK(r.solution == 1);
  CHECK(r.optimum == std::optional<std::size_t>{1});
}

TEST_CASE("nominee lies in the closed neighbourhood") {
  const Graph g = random_planar(50, 2);
  for (Label u : g.labels()) {
    const Label w = planar_nominee(g, u);
    CHECK((w == u || g.has_edge(u, w)));
  }
}

TEST_CASE("outputs dominate and stay within the ratio") {
  for (const Graph& g : {path(6), grid(4, 4), cycle(9), random_planar(30, 5), tree_T_alpha(2)}) {
    const PlanarRatio r = verify_planar_ratio(g);
    REQUIRE(r.optimum.has_value());
    CHECK(mds_problem().is_feasible(g, r.output, g.vertex_set()));
    CHECK(r.solution <= 205 * *r.optimum);
  }
}

TEST_CASE("rounds") { CHECK(planar_mds().rounds == 6); }
