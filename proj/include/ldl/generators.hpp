#pragma once

#include <cstdint>
#include <string>

#include "ldl/graph.hpp"

namespace ldl {

/// SplitMix64: state += 0x9E3779B97F4A7C15, then the output is mixed with
/// (z ^ z>>30) * 0xBF58476D1CE4E5B9, (z ^ z>>27) * 0x94D049BB133111EB, z ^ z>>31.
/// Integer-only, so sequences are identical on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Value in [0, bound) by modular reduction.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

// Canonical labelings use 0..n-1; grids are row-major.
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
/// Parts are {0..a-1} and {a..a+b-1}.
Graph complete_bipartite(int a, int b);
/// Center 0, leaves 1..leaves.
Graph star(int leaves);
Graph grid(int rows, int cols);
/// Cartesian product of two cycles; rows, cols >= 3.
Graph torus_grid(int rows, int cols);

/// Depth-2 tree: root 0, depth-1 vertices 1..alpha+1, each with alpha^2+1
/// leaf children appended in blocks.
Graph tree_T_alpha(int alpha);
/// Labels of the depth-1 vertices of tree_T_alpha(alpha).
VertexSet tree_T_alpha_depth1(int alpha);

/// Cycle on 2g+6 vertices with every vertex joined to its opposite.
Graph projective_circulant(int genus);

/// Spanning path 0..n-1 plus 2n attempted short chords (span 2..4), each
/// kept only if the graph stays planar.
Graph random_planar(int n, std::uint64_t seed);
/// Spanning path 0..n-1 plus every other pair independently with
/// probability p_milli/1000.
Graph random_graph(int n, int p_milli, std::uint64_t seed);

/// Tree on 0..n-1 where vertex i > 0 hangs below a uniformly chosen earlier vertex.
Graph random_tree(int n, std::uint64_t seed);

/// Resolves a generator spec such as "torus_grid:4,6", "random_planar:50,7",
/// "disjoint:complete:5;grid:3,3" (labels of later parts are shifted past the
/// earlier ones) or "file:path/to/graph.txt".
Graph generate(const std::string& spec);

}  // namespace ldl
