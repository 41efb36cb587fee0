#include <cstdlib>

#include "doctest.h"
#include "ldl/generators.hpp"
#include "ldl/local_sim.hpp"
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

LocalAlgorithm always() { return {"always", 0, [](const BallView&) { return true; }, false}; }

LocalAlgorithm local_max() {
  return {"local_max", 1,
          [](const BallView& v) { return v.core.vertex_set().back() == v.center; }, false};
}

}  // namespace

TEST_CASE("view of a path") {
  const Graph p5 = labelled_path(1, 5);
  const BallView v = collect_view(p5, 3, 1);
  CHECK(v.core == Graph::from_edges({2, 3, 4}, {{2, 3}, {3, 4}}));
  CHECK(v.boundary_stubs == std::map<Label, int>{{2, 1}, {4, 1}});
  CHECK(collect_view(p5, 3, 2).boundary_stubs.empty());
  CHECK(collect_view(p5, 1, 2).boundary_stubs == std::map<Label, int>{{3, 1}});
  const BallView lone = collect_view(Graph::from_edges({7}, {}), 7, 4);
  CHECK(lone.core.order() == 1);
  CHECK(lone.boundary_stubs.empty());
  CHECK_THROWS_AS(collect_view(p5, 9, 1), NoSuchVertex);
}

TEST_CASE("restrict matches a direct collect") {
  const Graph g = random_planar(60, 4);
  for (Label u : g.labels()) {
    const BallView wide = collect_view(g, u, 4);
    for (int r = 0; r <= 4; ++r) {
      const BallView narrow = restrict_view(wide, r);
      const BallView direct = collect_view(g, u, r);
      CHECK(narrow.core == direct.core);
      CHECK(narrow.boundary_stubs == direct.boundary_stubs);
    }
  }
}

TEST_CASE("run") {
  const Graph p3 = labelled_path(1, 3);
  CHECK(run(p3, always()) == p3.vertex_set());
  CHECK(run(p3, local_max()) == VertexSet{3});
  CHECK(run(p3, planar_mds()) == VertexSet{2});
  CHECK(run(Graph{}, always()).empty());
  const LocalAlgorithm bad{"bad", 0, [](const BallView& v) -> bool {
                             if (v.center == 2) throw std::runtime_error("boom");
                             return false;
                           }};
  try {
    run(p3, bad);
    FAIL("expected DecideFailed");
  } catch (const DecideFailed& e) {
    CHECK(e.vertex == 2);
  }
}

TEST_CASE("parallel and sequential evaluation agree") {
  const LocalAlgorithm a = planar_mds();
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Graph g = random_planar(80, seed);
    VertexSet sequential;
    for (Label u : g.labels()) {
      if (a.decide(collect_view(g, u, a.rounds))) sequential.insert(u);
    }
    CHECK(run(g, a) == sequential);
  }
}

TEST_CASE("order invariance") {
  const Graph p3 = labelled_path(1, 3);
  CHECK(order_invariance_check(p3, local_max(), {{1, 10}, {2, 20}, {3, 30}}));
  const LocalAlgorithm even{"even", 0, [](const BallView& v) { return v.center % 2 == 0; }};
  CHECK(!order_invariance_check(p3, even, {{1, 2}, {2, 3}, {3, 4}}));
  CHECK_THROWS_AS(order_invariance_check(p3, local_max(), {{1, 5}, {2, 4}, {3, 6}}), InvalidInput);
  CHECK_THROWS_AS(order_invariance_check(p3, local_max(), {{1, 5}, {2, 6}}), InvalidInput);
}
