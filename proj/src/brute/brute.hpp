#pragma once

// Exhaustive reference implementations used only to cross-check the main
// library. Every routine here is exponential; keep inputs tiny.

#include "ldl/graph.hpp"
#include "ldl/oracles.hpp"

namespace ldl::brute {

/// Tries candidate subsets in order of size, each size in lexicographic
/// order, and returns the first feasible one. At most 24 candidates.
OptResult opt(const Graph& g, const LocalProblem& p, const VertexSet& targets, const VertexSet& candidates);
OptResult opt(const Graph& g, const LocalProblem& p);

/// True iff g contains a subdivision of K5 or K3,3, found by trying every
/// branch-vertex choice and every set of internally disjoint connecting paths.
bool has_kuratowski_subdivision(const Graph& g);

/// All-pairs Floyd-Warshall distances, then the maximum over pairs of s.
/// Returns -1 when two members are disconnected.
int weak_diameter(const Graph& g, const VertexSet& s);

/// Every labelled connected graph on vertices 0..n-1.
std::vector<Graph> connected_graphs(int n);

}  // namespace ldl::brute
