#pragma once

#include <functional>
#include <string>

#include "ldl/graph.hpp"

namespace ldl {

/// Left-right planarity test (Brandes' formulation of de Fraysseix and
/// Rosenstiehl's criterion). Linear time; no embedding is produced.
bool is_planar(const Graph& g);

/// A graph class given by a membership test.
struct ClassPredicate {
  std::string name;
  std::function<bool(const Graph&)> test;
  bool hereditary = false;
};

ClassPredicate planar_class();

/// Vertices whose induced radius-t ball is outside the class.
VertexSet error_set(const Graph& g, int t, const ClassPredicate& c);

/// Largest weak diameter (in g) of a connected component of
/// g[N^{2 rho}[error_set(g, t, c)]]; 0 when the error set is empty.
int niceness_bound_check(const Graph& g, int t, const ClassPredicate& c, int rho);

/// Upper bound on that diameter for Euler genus g graphs: g * (2T + 4 rho + 1),
/// exclusive.
int genus_niceness_bound(int genus, int t, int rho);

}  // namespace ldl
