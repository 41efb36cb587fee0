#pragma once

#include <functional>
#include <map>
#include <string>

#include "ldl/error.hpp"
#include "ldl/graph.hpp"

namespace ldl {

/// What a vertex knows after `radius` rounds: the induced ball around it and,
/// for every vertex on the outer sphere, how many of its edges leave the ball.
/// Vertices beyond the ball are never named.
struct BallView {
  Label center = 0;
  int radius = 0;
  Graph core;
  std::map<Label, int> boundary_stubs;
};

/// A deterministic LOCAL algorithm: `decide` maps a radius-`rounds` view to
/// the membership bit of its center.
struct LocalAlgorithm {
  std::string name;
  int rounds = 0;
  std::function<bool(const BallView&)> decide;
  bool needs_polynomial_ids = false;
};

BallView collect_view(const Graph& g, Label u, int r);

/// The view of the same center at a smaller radius, derived from `view` alone.
BallView restrict_view(const BallView& view, int r);

/// Raised by run() when decide fails; names the vertex.
class DecideFailed : public Error {
 public:
  DecideFailed(Label v, const std::string& what)
      : Error("decide failed at vertex " + std::to_string(v) + ": " + what), vertex(v) {}
  Label vertex;
};

/// Evaluates every vertex (in parallel, see parallel_for) and returns the
/// selected labels.
VertexSet run(const Graph& g, const LocalAlgorithm& a);

/// True iff run(relabel(g)) = relabel(run(g)). The mapping must be strictly
/// increasing on labels(g).
bool order_invariance_check(const Graph& g, const LocalAlgorithm& a, const std::map<Label, Label>& mapping);

}  // namespace ldl
