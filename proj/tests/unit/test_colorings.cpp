#include <sstream>

#include "brute.hpp"
#include "doctest.h"
#include "ldl/colorings.hpp"
#include "ldl/generators.hpp"

using namespace ldl;

TEST_CASE("path blocks") {
  std::vector<Label> labels{1, 2, 3, 4, 5, 6};
  const Graph p6 = Graph::from_edges(labels, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}});
  const BoundedColoring c = path_coloring(p6, 3);
  REQUIRE(c.classes.size() == 2);
  CHECK(c.classes[0] == VertexSet{1, 2, 3});
  CHECK(c.classes[1] == VertexSet{4, 5, 6});
  CHECK(c.bound == 2);
  CHECK(verify_bounded(p6, c));
  CHECK(verify_bounded(path(1), path_coloring(path(1), 5)));
  for (int r = 1; r <= 5; ++r) {
    for (int n = 1; n <= 40; ++n) CHECK(verify_bounded(path(n), path_coloring(path(n), r)));
  }
}

TEST_CASE("grid bricks at small scale") {
  CHECK(verify_bounded(grid(9, 6), grid_coloring(grid(9, 6), 9, 6, 2)));
  CHECK(verify_bounded(grid(1, 12), grid_coloring(grid(1, 12), 1, 12, 3)));
  for (int side = 1; side <= 12; ++side) CHECK(verify_bounded(grid(side, side), grid_coloring(grid(side, side), side, side, 1)));
  const BoundedColoring c = grid_coloring(grid(16, 16), 16, 16, 3);
  CHECK(c.classes.size() == 3);
  CHECK(c.bound == 4);
}

TEST_CASE("diameters agree with the pairwise oracle") {
  const Graph g = grid(8, 8);
  const BoundedColoring c = grid_coloring(g, 8, 8, 2);
  int worst = 0;
  for (const auto& cls : c.classes) {
    for (const auto& comp : khop_components(g, cls, 2)) worst = std::max(worst, brute::weak_diameter(g, comp));
  }
  CHECK(max_class_diameter(g, c.classes, 2) == worst);
}

TEST_CASE("verify rejects non-partitions") {
  const Graph p3 = path(3);
  CHECK_THROWS_AS(verify_bounded(p3, BoundedColoring{{{0, 1}}, 1, 0}), InvalidInput);
  CHECK_THROWS_AS(verify_bounded(p3, BoundedColoring{{{0, 1}, {1, 2}}, 1, 0}), InvalidInput);
  CHECK(!verify_bounded(p3, BoundedColoring{{{0, 1, 2}}, 1, 1}));
}

TEST_CASE("class file round trip") {
  const std::vector<VertexSet> classes{{1, 5, 9}, {2}, {}};
  std::stringstream buf;
  write_classes(buf, classes);
  CHECK(read_classes(buf) == classes);
}
