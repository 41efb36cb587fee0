#include "brute.hpp"
#include "doctest.h"
#include "ldl/generators.hpp"
#include "ldl/planarity.hpp"

using namespace ldl;

TEST_CASE("small classics") {
  CHECK(is_planar(Graph{}));
  CHECK(is_planar(complete(4)));
  CHECK(!is_planar(complete(5)));
  CHECK(!is_planar(complete_bipartite(3, 3)));
  CHECK(is_planar(complete_bipartite(2, 40)));
  CHECK(is_planar(grid(6, 6)));
  CHECK(is_planar(random_tree(200, 3)));
  CHECK(!is_planar(torus_grid(3, 3)));
  CHECK(!is_planar(generate("disjoint:path:4;complete:5")));
}

TEST_CASE("subdivided Kuratowski graphs") {
  // K3,3 with every edge subdivided once.
  std::vector<Label> labels{0, 1, 2, 3, 4, 5};
  std::vector<Edge> edges;
  Label next = 6;
  for (Label a = 0; a < 3; ++a) {
    for (Label b = 3; b < 6; ++b) {
      labels.push_back(next);
      edges.emplace_back(a, next);
      edges.emplace_back(next, b);
      ++next;
    }
  }
  CHECK(!is_planar(Graph::from_edges(labels, edges)));
  CHECK(is_planar(induced(Graph::from_edges(labels, edges), VertexSet(std::vector<Label>(labels.begin(), labels.end() - 1)))));
}

TEST_CASE("agrees with Kuratowski search on random graphs") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int n = 5 + static_cast<int>(seed % 4);
    const Graph g = random_graph(n, 250 + static_cast<int>(seed % 5) * 100, seed);
    CHECK(is_planar(g) == !brute::has_kuratowski_subdivision(g));
  }
}

TEST_CASE("error set") {
  const Graph t = torus_grid(4, 4);
  CHECK(error_set(t, 1, planar_class()).empty());
  CHECK(error_set(t, 4, planar_class()) == t.vertex_set());
  const Graph mix = generate("disjoint:complete:5;path:4");
  const VertexSet k5{0, 1, 2, 3, 4};
  CHECK(error_set(mix, 1, planar_class()) == k5);
  CHECK(error_set(grid(5, 5), 3, planar_class()).empty());
}

TEST_CASE("niceness bound") {
  CHECK(niceness_bound_check(grid(4, 4), 3, planar_class(), 1) == 0);
  CHECK(niceness_bound_check(complete(5), 1, planar_class(), 1) == 1);
  CHECK(niceness_bound_check(torus_grid(4, 4), 4, planar_class(), 1) == 4);
  CHECK(genus_niceness_bound(1, 4, 1) == 13);
}
