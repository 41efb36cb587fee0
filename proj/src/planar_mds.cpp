#include "ldl/planar_mds.hpp"

#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>

namespace ldl {

Label planar_nominee(const Graph& h, Label u) {
  const Graph local = induced(h, ball(h, u, 5));
  const VertexSet d = best_nice_mds(local, ball(local, u, 4));
  // D_u dominates u, so it meets N[u].
  return d.intersect(ball(local, u, 1)).front();
}

namespace {

// Nominations depend only on the radius-5 ball, which neighbouring vertices
// see identically; a shared memo avoids solving the same ball repeatedly.
class NomineeCache {
 public:
  Label get(const Graph& view, Label u) {
    const Graph local = induced(view, ball(view, u, 5));
    std::string key = std::to_string(u) + '|';
    for (Label v : local.labels()) key += std::to_string(v) + ',';
    key += '|';
    for (const auto& [a, b] : local.edges()) key += std::to_string(a) + '-' + std::to_string(b) + ',';
    {
      std::lock_guard lock(mutex_);
      if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    const Label v = planar_nominee(local, u);
    std::lock_guard lock(mutex_);
    memo_.emplace(std::move(key), v);
    return v;
  }

 private:
  std::mutex mutex_;
  std::unordered_map<std::string, Label> memo_;
};

}  // namespace

LocalAlgorithm planar_mds() {
  auto cache = std::make_shared<NomineeCache>();
  LocalAlgorithm a;
  a.name = "planar_mds";
  a.rounds = 6;
  a.decide = [cache](const BallView& view) {
    const int c = view.core.index_of(view.center);
    if (cache->get(view.core, view.center) == view.center) return true;
    for (int w : view.core.neighbors(c)) {
      if (cache->get(view.core, view.core.label(w)) == view.center) return true;
    }
    return false;
  };
  return a;
}

PlanarRatio verify_planar_ratio(const Graph& g, Deadline deadline) {
  PlanarRatio out;
  out.output = run(g, planar_mds());
  out.solution = out.output.size();
  try {
    out.optimum = opt(g, mds_problem(), deadline).size;
  } catch (const OracleTimeout&) {
  }
  return out;
}

}  // namespace ldl
