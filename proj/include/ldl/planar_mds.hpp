#pragma once

#include <optional>

#include "ldl/local_sim.hpp"
#include "ldl/oracles.hpp"

namespace ldl {

/// The vertex that u adds: the smallest label of D_u intersected with N[u],
/// where D_u = best_nice_mds(h[N^5[u]], N^4[u]). `h` must contain N^5[u] of
/// the host graph with host distances intact.
Label planar_nominee(const Graph& h, Label u);

/// Six-round planar dominating-set algorithm. A vertex is selected iff some
/// closed neighbour nominates it; each vertex re-derives its neighbours'
/// nominations from its own radius-6 view. Boundary stubs are ignored.
LocalAlgorithm planar_mds();

struct PlanarRatio {
  std::size_t solution = 0;
  /// Absent when the oracle ran out of time.
  std::optional<std::size_t> optimum;
  VertexSet output;
};

/// Runs planar_mds and, time permitting, the exact oracle.
PlanarRatio verify_planar_ratio(const Graph& g, Deadline deadline = std::nullopt);

}  // namespace ldl
