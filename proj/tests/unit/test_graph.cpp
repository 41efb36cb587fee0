#include <set>
#include <sstream>

#include "brute.hpp"
#include "doctest.h"
#include "ldl/error.hpp"
#include "ldl/generators.hpp"
#include "ldl/graph.hpp"
#include "ldl/graph_io.hpp"

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

TEST_CASE("construction rejects malformed input") {
  CHECK_THROWS_AS(Graph::from_edges({1, 2}, {{1, 1}}), InvalidInput);
  CHECK_THROWS_AS(Graph::from_edges({1, 2}, {{1, 3}}), NoSuchVertex);
  CHECK_THROWS_AS(Graph::from_edges({1, 1}, {}), InvalidInput);
  const Graph g = Graph::from_edges({3, 1, 2}, {{1, 2}, {2, 1}, {3, 2}});
  CHECK(g.edge_count() == 2);
  CHECK(g.labels()[0] == 1);
  CHECK(g == Graph::from_edges({1, 2, 3}, {{2, 3}, {1, 2}}));
}

TEST_CASE("ball") {
  const Graph p3 = labelled_path(1, 3);
  CHECK(ball(p3, 2, 0) == VertexSet{2});
  CHECK(ball(p3, 1, 1) == VertexSet{1, 2});
  CHECK_THROWS_AS(ball(p3, 9, 1), NoSuchVertex);
  const Graph g = grid(3, 3);
  CHECK(ball(g, 4, 1) == VertexSet{1, 3, 4, 5, 7});
  for (int r = 0; r < 5; ++r) CHECK(ball(g, 0, r).is_subset_of(ball(g, 0, r + 1)));
}

TEST_CASE("induced") {
  const Graph k3 = Graph::from_edges({1, 2, 3}, {{1, 2}, {2, 3}, {1, 3}});
  CHECK(induced(k3, k3.vertex_set()) == k3);
  CHECK(induced(k3, {1, 2}) == Graph::from_edges({1, 2}, {{1, 2}}));
  const Graph c6 = cycle(6);
  CHECK(induced(c6, {0, 2, 4}).edge_count() == 0);
  CHECK(induced(induced(c6, {0, 1, 2}), {0, 1, 2}) == induced(c6, {0, 1, 2}));
  CHECK_THROWS_AS(induced(c6, {7}), NoSuchVertex);
}

TEST_CASE("power") {
  const Graph p4 = labelled_path(1, 4);
  CHECK(power(p4, 1) == p4);
  CHECK(power(p4, 2) == Graph::from_edges({1, 2, 3, 4}, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}));
  CHECK(power(p4, 3).edge_count() == 6);
  CHECK(power(power(p4, 2), 1) == power(p4, 2));
  CHECK_THROWS(power(p4, 0));
}

TEST_CASE("khop components") {
  const Graph p7 = labelled_path(1, 7);
  CHECK(khop_components(p7, {}, 2).empty());
  const auto parts = khop_components(p7, {1, 3, 7}, 2);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == VertexSet{1, 3});
  CHECK(parts[1] == VertexSet{7});
  CHECK(khop_components(p7, {5}, 3).size() == 1);
  // Refinement: each class at k sits inside a class at k+1.
  const Graph g = grid(5, 5);
  const VertexSet x{0, 3, 7, 12, 20, 24};
  for (int k = 1; k < 5; ++k) {
    const auto fine = khop_components(g, x, k);
    const auto coarse = khop_components(g, x, k + 1);
    for (const auto& f : fine) {
      bool inside = false;
      for (const auto& c : coarse) inside = inside || f.is_subset_of(c);
      CHECK(inside);
    }
  }
}

TEST_CASE("weak diameter") {
  CHECK(weak_diameter(path(3), {1}) == 0);
  CHECK(weak_diameter(labelled_path(1, 5), {1, 5}) == 4);
  CHECK(weak_diameter(cycle(8), {0, 4}) == 4);
  const Graph two = Graph::from_edges({1, 2, 3, 4}, {{1, 2}, {3, 4}});
  CHECK_THROWS_AS(weak_diameter(two, {1, 3}), InfiniteDiameter);
}

TEST_CASE("weak diameter of khop components matches pairwise oracle") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = random_graph(12, 150, seed);
    SplitMix64 rng(seed);
    VertexSet x;
    for (Label v : g.labels()) {
      if (rng.below(3) == 0) x.insert(v);
    }
    for (int k = 1; k <= 3; ++k) {
      for (const auto& comp : khop_components(g, x, k)) CHECK(weak_diameter(g, comp) == brute::weak_diameter(g, comp));
    }
  }
}

TEST_CASE("components and distances") {
  CHECK(components(grid(3, 4)).size() == 1);
  const Graph two = Graph::from_edges({1, 2, 3, 4}, {{1, 2}, {3, 4}});
  const auto parts = components(two);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == VertexSet{1, 2});
  std::multiset<int> d;
  for (const auto& [v, dist] : distances_from(cycle(6), 2)) d.insert(dist);
  CHECK(d == std::multiset<int>{0, 1, 1, 2, 2, 3});
  CHECK(distance(two, 1, 3) == -1);
  CHECK(eccentricity(path(5), 0) == 4);
}

TEST_CASE("relabel and disjoint union") {
  const Graph g = path(3);
  const Graph h = relabel(g, {{0, 10}, {1, 20}, {2, 30}});
  CHECK(h.has_edge(10, 20));
  CHECK(!h.has_edge(10, 30));
  CHECK(disjoint_union(g, h).order() == 6);
  CHECK_THROWS(disjoint_union(g, g));
}

TEST_CASE("edge list round trip") {
  const Graph g = generate("disjoint:grid:2,3;star:3");
  std::stringstream buf;
  write_edge_list(buf, g);
  const std::string text = buf.str();
  CHECK(text.rfind("p 10 10\n", 0) == 0);
  const Graph back = read_edge_list(buf);
  CHECK(back == g);
  std::stringstream again;
  write_edge_list(again, back);
  CHECK(again.str() == text);

  std::stringstream commented("c hello\np 2 1\nv 5\nv 9\ne 9 5\n");
  CHECK(read_edge_list(commented) == Graph::from_edges({5, 9}, {{5, 9}}));
  std::stringstream wrong("p 3 1\nv 1\nv 2\ne 1 2\n");
  CHECK_THROWS_AS(read_edge_list(wrong), InvalidInput);
}
