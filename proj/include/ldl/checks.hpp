#pragma once

// Property checks shared by the `verify` command and the acceptance test.
// Each check runs a family of instances against exact oracles and reports a
// verdict with either summary statistics or the first counterexample.

#include <cstdint>
#include <string>
#include <vector>

#include "ldl/graph.hpp"

namespace ldl::checks {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Instance {
  std::string name;
  Graph g;
};

/// Every connected labelled graph with at most `exhaustive_upto` vertices,
/// then distinct connected random graphs up to `max_n` vertices until
/// `min_count` instances are collected. Only planar graphs are kept.
std::vector<Instance> small_planar_instances(std::size_t min_count, int exhaustive_upto, int max_n);
/// Every connected labelled graph up to `exhaustive_upto` vertices plus
/// `random_count` distinct connected random graphs on up to `max_n` vertices.
std::vector<Instance> small_connected_instances(int exhaustive_upto, std::size_t random_count, int max_n);
/// Grids, paths and stars with at most max_n vertices.
std::vector<Instance> structured_planar(int max_n);
/// K5 plus planar compounds, torus grids 3x3..5x5, projective circulants 1..4.
std::vector<Instance> nonplanar_family();

Outcome planar_ratio(const std::vector<Instance>& instances);
Outcome planar_feasibility(std::size_t count, int max_n, std::uint64_t seed);
Outcome cut_view_toy(std::size_t pairs, int max_n, std::uint64_t seed);
Outcome cut_view_planar(std::size_t pairs, std::uint64_t seed);
Outcome cut_size(const std::vector<Instance>& instances);
Outcome meta_b_contract(const std::vector<Instance>& instances, const std::vector<int>& ts);
Outcome genus_contract(const std::vector<Instance>& instances, const std::vector<int>& ts, int ratio_max_n);
Outcome non_uniformity(const std::vector<int>& alphas);
Outcome balance(int grid_max, int path_max, const std::vector<int>& rs);
Outcome path_colorings(int max_r, int max_len);
Outcome grid_colorings(int max_r, int max_side);
Outcome oracle_equivalence(int max_n, std::size_t random_count, std::uint64_t seed);
Outcome planarity_vs_kuratowski(std::size_t count, int max_n, std::uint64_t seed);
Outcome order_invariance(const std::vector<Instance>& instances, std::size_t count, std::uint64_t seed);
Outcome additive_wrapper(int max_n);
Outcome niceness(const std::vector<int>& ts);

}  // namespace ldl::checks
