#include "ldl/local_sim.hpp"

#include "ldl/error.hpp"
#include "ldl/parallel.hpp"

namespace ldl {

BallView collect_view(const Graph& g, Label u, int r) {
  if (r < 0) throw InvalidInput("view radius must be >= 0");
  const int src = g.index_of(u);
  const auto dist = bfs_indices(g, std::span<const int>(&src, 1), r + 1);

  BallView view;
  view.center = u;
  view.radius = r;
  std::vector<Label> inside;
  for (int v = 0; v < static_cast<int>(g.order()); ++v) {
    const int d = dist[static_cast<std::size_t>(v)];
    if (d < 0 || d > r) continue;
    inside.push_back(g.label(v));
    if (d != r) continue;
    int leaving = 0;
    for (int w : g.neighbors(v)) leaving += dist[static_cast<std::size_t>(w)] == r + 1 ? 1 : 0;
    if (leaving > 0) view.boundary_stubs.emplace(g.label(v), leaving);
  }
  view.core = induced(g, VertexSet::from_sorted(std::move(inside)));
  return view;
}

BallView restrict_view(const BallView& view, int r) {
  if (r < 0 || r > view.radius) throw InvalidInput("restricted radius must lie in [0, view radius]");
  if (r == view.radius) return view;
  // Every neighbour of a distance-r vertex lies within distance r+1 <= radius,
  // so the smaller view is fully determined by the core.
  return collect_view(view.core, view.center, r);
}

VertexSet run(const Graph& g, const LocalAlgorithm& a) {
  std::vector<char> picked(g.order(), 0);
  parallel_for(g.order(), [&](std::size_t i) {
    const Label u = g.label(static_cast<int>(i));
    try {
      picked[i] = a.decide(collect_view(g, u, a.rounds)) ? 1 : 0;
    } catch (const DecideFailed&) {
      throw;
    } catch (const std::exception& e) {
      throw DecideFailed(u, e.what());
    }
  });
  std::vector<Label> out;
  for (std::size_t i = 0; i < picked.size(); ++i) {
    if (picked[i]) out.push_back(g.label(static_cast<int>(i)));
  }
  return VertexSet::from_sorted(std::move(out));
}

bool order_invariance_check(const Graph& g, const LocalAlgorithm& a, const std::map<Label, Label>& mapping) {
  bool first = true;
  Label prev = 0;
  for (Label v : g.labels()) {
    const auto it = mapping.find(v);
    if (it == mapping.end()) throw InvalidInput("relabelling misses vertex " + std::to_string(v));
    if (!first && it->second <= prev) throw InvalidInput("relabelling is not strictly increasing");
    prev = it->second;
    first = false;
  }
  return run(relabel(g, mapping), a) == relabel(run(g, a), mapping);
}

}  // namespace ldl
