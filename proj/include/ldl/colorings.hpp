#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ldl/graph.hpp"

namespace ldl {

/// A partition of V(g) whose classes, chained at distance <= r, are claimed to
/// have weak diameter <= bound.
struct BoundedColoring {
  std::vector<VertexSet> classes;
  int r = 1;
  int bound = 0;
};

/// Alternating blocks of r consecutive vertices, walking from the endpoint
/// with the smaller label. Claims bound r-1.
BoundedColoring path_coloring(const Graph& g, int r);

/// Three-colour brick pattern on grid(rows, cols): bricks of width 2r-2 and
/// height r (both at least 1), each brick row shifted by 3r-3. Single rows or
/// columns use path blocks. Claims bound 2(r-1).
BoundedColoring grid_coloring(const Graph& g, int rows, int cols, int r);

/// Largest weak diameter over the r-hop components of all classes.
int max_class_diameter(const Graph& g, const std::vector<VertexSet>& classes, int r);

/// True iff every r-hop component of every class has weak diameter <= bound.
/// Throws InvalidInput when the classes do not partition V(g).
bool verify_bounded(const Graph& g, const BoundedColoring& col);

std::vector<VertexSet> read_classes(std::istream& in);
void write_classes(std::ostream& out, const std::vector<VertexSet>& classes);

}  // namespace ldl
