#include "ldl/checks.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "brute.hpp"
#include "ldl/colorings.hpp"
#include "ldl/generators.hpp"
#include "ldl/meta_lift.hpp"
#include "ldl/parallel.hpp"
#include "ldl/planar_mds.hpp"
#include "ldl/planarity.hpp"

namespace ldl::checks {

namespace {

using Failure = std::optional<std::string>;

// Evaluates body on every index in parallel; the verdict reports the failure
// with the smallest index so output does not depend on scheduling.
Outcome over(std::size_t n, const std::function<Failure(std::size_t)>& body) {
  std::vector<Failure> found(n);
  parallel_for(n, [&](std::size_t i) {
    try {
      found[i] = body(i);
    } catch (const std::exception& e) {
      found[i] = std::string("exception: ") + e.what();
    }
  });
  for (auto& f : found) {
    if (f) return {false, *f};
  }
  return {};
}

std::string describe(const Graph& g) {
  std::ostringstream out;
  out << "graph(n=" << g.order() << ", edges=";
  bool first = true;
  for (const auto& [a, b] : g.edges()) {
    out << (first ? "" : " ") << a << '-' << b;
    first = false;
  }
  out << ')';
  return out.str();
}

std::string show(const VertexSet& s) {
  std::ostringstream out;
  out << s;
  return out.str();
}

std::string decimal(std::size_t num, std::size_t den) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den));
  return buf;
}

// Running maximum of num/den compared exactly.
struct MaxRatio {
  std::size_t num = 0;
  std::size_t den = 1;
  void offer(std::size_t n, std::size_t d) {
    if (n * den > num * d) {
      num = n;
      den = d;
    }
  }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den) + " = " + decimal(num, den); }
};

std::vector<Edge> edge_key(const Graph& g) { return g.edges(); }

// Distinct connected random graphs on 6..max_n vertices, skipping any edge
// set already present in `seen`.
void add_random_connected(std::vector<Instance>& out, std::set<std::vector<Edge>>& seen, std::size_t want,
                          int min_n, int max_n, bool planar_only) {
  static constexpr int kDensity[] = {100, 200, 300, 400, 500, 650};
  std::uint64_t seed = 0;
  std::size_t added = 0;
  std::size_t stale = 0;
  while (added < want && min_n <= max_n && stale < 200000) {
    const int n = min_n + static_cast<int>(seed % static_cast<std::uint64_t>(max_n - min_n + 1));
    const int p = kDensity[(seed / 7) % 6];
    Graph g = random_graph(n, p, seed);
    const std::string name = "random_graph:" + std::to_string(n) + "," + std::to_string(p) + "," + std::to_string(seed);
    ++seed;
    if (planar_only && !is_planar(g)) {
      ++stale;
      continue;
    }
    if (!seen.insert(edge_key(g)).second) {
      ++stale;
      continue;
    }
    out.push_back({name, std::move(g)});
    ++added;
  }
}

LocalAlgorithm toy_algorithm() {
  // Parity of the full degree (core edges plus stubs) xor being the largest
  // label in the closed neighbourhood; reads both the core and the stubs.
  LocalAlgorithm a;
  a.name = "toy";
  a.rounds = 1;
  a.decide = [](const BallView& v) {
    const int c = v.core.index_of(v.center);
    std::size_t degree = v.core.degree(c);
    if (const auto it = v.boundary_stubs.find(v.center); it != v.boundary_stubs.end()) degree += static_cast<std::size_t>(it->second);
    const bool top = v.core.labels().back() == v.center;
    return (degree % 2 == 1) != top;
  };
  return a;
}

// run(g, a) restricted to s, evaluating only the members of s.
VertexSet run_on(const Graph& g, const LocalAlgorithm& a, const VertexSet& s) {
  std::vector<Label> out;
  for (Label v : s) {
    if (a.decide(collect_view(g, v, a.rounds))) out.push_back(v);
  }
  return VertexSet::from_sorted(std::move(out));
}

VertexSet random_subset(SplitMix64& rng, const Graph& g, std::size_t max_size) {
  const std::size_t size = 1 + static_cast<std::size_t>(rng.below(max_size));
  VertexSet s;
  for (std::size_t i = 0; i < size; ++i) s.insert(g.label(static_cast<int>(rng.below(g.order()))));
  return s;
}

bool dominates(const Graph& g, const VertexSet& d) { return mds_problem().is_feasible(g, d, g.vertex_set()); }

}  // namespace

// ---- instance families -----------------------------------------------------

std::vector<Instance> small_connected_instances(int exhaustive_upto, std::size_t random_count, int max_n) {
  std::vector<Instance> out;
  std::set<std::vector<Edge>> seen;
  for (int n = 1; n <= exhaustive_upto; ++n) {
    for (auto& g : brute::connected_graphs(n)) {
      seen.insert(edge_key(g));
      out.push_back({describe(g), std::move(g)});
    }
  }
  add_random_connected(out, seen, random_count, exhaustive_upto + 1, max_n, false);
  return out;
}

std::vector<Instance> small_planar_instances(std::size_t min_count, int exhaustive_upto, int max_n) {
  std::vector<Instance> out;
  std::set<std::vector<Edge>> seen;
  for (int n = 1; n <= exhaustive_upto; ++n) {
    for (auto& g : brute::connected_graphs(n)) {
      if (!is_planar(g)) continue;
      seen.insert(edge_key(g));
      out.push_back({describe(g), std::move(g)});
    }
  }
  if (out.size() < min_count) add_random_connected(out, seen, min_count - out.size(), exhaustive_upto + 1, max_n, true);
  return out;
}

std::vector<Instance> structured_planar(int max_n) {
  std::vector<Instance> out;
  for (int rows = 1; rows <= max_n; ++rows) {
    for (int cols = rows; rows * cols <= max_n; ++cols) {
      const std::string name = "grid:" + std::to_string(rows) + "," + std::to_string(cols);
      out.push_back({name, generate(name)});
    }
  }
  for (int n = 1; n <= max_n; ++n) out.push_back({"path:" + std::to_string(n), path(n)});
  for (int leaves = 1; leaves + 1 <= max_n; ++leaves) out.push_back({"star:" + std::to_string(leaves), star(leaves)});
  return out;
}

std::vector<Instance> nonplanar_family() {
  std::vector<std::string> specs = {
      "disjoint:complete:5;path:4",
      "disjoint:complete:5;grid:3,3",
      "disjoint:complete:5;random_planar:20,1",
      "disjoint:complete:5;random_planar:30,2",
      "disjoint:complete:5;complete:5;path:6",
  };
  for (int a = 3; a <= 5; ++a) {
    for (int b = 3; b <= 5; ++b) specs.push_back("torus_grid:" + std::to_string(a) + "," + std::to_string(b));
  }
  for (int g = 1; g <= 4; ++g) specs.push_back("projective_circulant:" + std::to_string(g));
  std::vector<Instance> out;
  for (const auto& s : specs) out.push_back({s, generate(s)});
  return out;
}

// ---- planar algorithm ------------------------------------------------------

Outcome planar_ratio(const std::vector<Instance>& instances) {
  const LocalAlgorithm a = planar_mds();
  std::vector<std::pair<std::size_t, std::size_t>> ratios(instances.size());
  Outcome res = over(instances.size(), [&](std::size_t i) -> Failure {
    const Graph& g = instances[i].g;
    const VertexSet d = run(g, a);
    if (!dominates(g, d)) return instances[i].name + ": output " + show(d) + " does not dominate";
    const std::size_t best = opt(g, mds_problem()).size;
    ratios[i] = {d.size(), best};
    if (d.size() > 205 * best) return instances[i].name + ": ratio " + decimal(d.size(), best) + " exceeds 205";
    return std::nullopt;
  });
  if (!res.pass) return res;
  MaxRatio worst;
  for (const auto& [num, den] : ratios) worst.offer(num, den);
  res.detail = std::to_string(instances.size()) + " instances, max ratio " + worst.str();
  return res;
}

Outcome planar_feasibility(std::size_t count, int max_n, std::uint64_t seed) {
  const LocalAlgorithm a = planar_mds();
  std::vector<std::size_t> sizes(count);
  Outcome res = over(count, [&](std::size_t i) -> Failure {
    const int n = 10 + static_cast<int>((seed + i * 37) % static_cast<std::uint64_t>(max_n - 9));
    const Graph g = random_planar(n, seed + i);
    sizes[i] = g.order();
    if (!is_planar(g)) return "random_planar:" + std::to_string(n) + "," + std::to_string(seed + i) + " is not planar";
    const VertexSet d = run(g, a);
    if (!dominates(g, d)) return "random_planar:" + std::to_string(n) + "," + std::to_string(seed + i) + ": not dominating";
    return std::nullopt;
  });
  if (res.pass) {
    res.detail = std::to_string(count) + " instances, n up to " + std::to_string(*std::max_element(sizes.begin(), sizes.end()));
  }
  return res;
}

// ---- cutting ---------------------------------------------------------------

Outcome cut_view_toy(std::size_t pairs, int max_n, std::uint64_t seed) {
  const LocalAlgorithm a = toy_algorithm();
  const LocalProblem problems[] = {mds_problem(), ktuple_problem(2), distance_ds_problem(2)};
  Outcome res = over(pairs, [&](std::size_t i) -> Failure {
    SplitMix64 rng(seed + i);
    const int n = 4 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n - 3)));
    const int p = 50 + static_cast<int>(rng.below(200));
    const Graph g = random_graph(n, p, seed + i);
    const VertexSet s = random_subset(rng, g, 3);
    const LocalProblem& prob = problems[i % 3];
    const Graph cut = cut_around(g, s, a.rounds + 1, prob);
    const VertexSet lhs = run(g, a).intersect(s);
    const VertexSet rhs = run(cut, a).intersect(s);
    if (lhs != rhs) {
      return "random_graph:" + std::to_string(n) + "," + std::to_string(p) + "," + std::to_string(seed + i) +
             " S=" + show(s) + " (" + prob.name + "): " + show(lhs) + " vs " + show(rhs);
    }
    return std::nullopt;
  });
  if (res.pass) res.detail = std::to_string(pairs) + " pairs, n <= " + std::to_string(max_n);
  return res;
}

Outcome cut_view_planar(std::size_t pairs, std::uint64_t seed) {
  const LocalAlgorithm a = planar_mds();
  std::vector<std::size_t> cut_sizes(pairs);
  Outcome res = over(pairs, [&](std::size_t i) -> Failure {
    SplitMix64 rng(seed + i);
    const int n = 24 + static_cast<int>(rng.below(40));
    const Graph g = random_planar(n, seed + i);
    const VertexSet s = random_subset(rng, g, 2);
    const Graph cut = cut_around(g, s, a.rounds + 1, mds_problem());
    cut_sizes[i] = cut.order();
    const VertexSet lhs = run_on(g, a, s);
    const VertexSet rhs = run_on(cut, a, s);
    if (lhs != rhs) {
      return "random_planar:" + std::to_string(n) + "," + std::to_string(seed + i) + " S=" + show(s) + ": " + show(lhs) +
             " vs " + show(rhs);
    }
    return std::nullopt;
  });
  if (res.pass) {
    res.detail = std::to_string(pairs) + " pairs with k = 7, cut graphs of " +
                 std::to_string(*std::min_element(cut_sizes.begin(), cut_sizes.end())) + ".." +
                 std::to_string(*std::max_element(cut_sizes.begin(), cut_sizes.end())) + " vertices";
  }
  return res;
}

Outcome cut_size(const std::vector<Instance>& instances) {
  const LocalProblem problems[] = {mds_problem(), ktuple_problem(2), ktuple_problem(3), distance_ds_problem(2),
                                   distance_ds_problem(3)};
  std::vector<std::size_t> tested(instances.size());
  Outcome res = over(instances.size(), [&](std::size_t i) -> Failure {
    const Graph& g = instances[i].g;
    SplitMix64 rng(i);
    std::vector<VertexSet> targets;
    for (Label v : g.labels()) {
      for (int k = 0; k <= 1; ++k) targets.push_back(ball(g, v, k));
    }
    targets.push_back(random_subset(rng, g, g.order()));
    targets.push_back(g.vertex_set());
    for (const auto& p : problems) {
      for (const auto& x : targets) {
        const VertexSet y = cut_targets(g, x, p);
        if (!x.is_subset_of(y)) return instances[i].name + " (" + p.name + "): Y misses part of X";
        const std::size_t lhs = brute::opt(induced(g, y), p).size;
        const std::size_t rhs = brute::opt(g, p, x, g.vertex_set()).size;
        ++tested[i];
        if (lhs > rhs) {
          return instances[i].name + " (" + p.name + ") X=" + show(x) + ": opt(G[Y]) = " + std::to_string(lhs) +
                 " > opt(G, X) = " + std::to_string(rhs);
        }
      }
    }
    return std::nullopt;
  });
  if (res.pass) {
    std::size_t total = 0;
    for (auto t : tested) total += t;
    res.detail = std::to_string(instances.size()) + " graphs, " + std::to_string(total) + " (problem, X) cases";
  }
  return res;
}

// ---- meta algorithms -------------------------------------------------------

Outcome meta_b_contract(const std::vector<Instance>& instances, const std::vector<int>& ts) {
  const LocalAlgorithm a = planar_mds();
  const LocalProblem p = mds_problem();
  const std::size_t cases = instances.size() * ts.size();
  std::vector<std::size_t> nonempty(cases);
  Outcome res = over(cases, [&](std::size_t c) -> Failure {
    const Instance& inst = instances[c / ts.size()];
    const int t = ts[c % ts.size()];
    const Graph& g = inst.g;
    LiftConfig cfg;
    cfg.T = t;
    cfg.rho = 1;
    cfg.r = a.rounds;
    const std::string where = inst.name + " T=" + std::to_string(t);
    const MetaResult m = meta_b(g, a, p, cfg);
    nonempty[c] = m.report.error_set.empty() ? 0 : 1;
    if (!p.is_feasible(g, m.solution, g.vertex_set())) return where + ": output infeasible";
    const std::size_t best = opt(g, p).size;
    if (m.solution.size() > m.report.kept.size() + best) {
      return where + ": |output| = " + std::to_string(m.solution.size()) + " > " + std::to_string(m.report.kept.size()) +
             " + " + std::to_string(best);
    }
    // Recompute the brute-force region and its widest component independently.
    const VertexSet x = error_set(g, t, planar_class());
    const VertexSet u = unsatisfied(g, p, run(g, a).minus(x), g.vertex_set());
    const VertexSet region = ball(g, x, 2).unite(ball(g, u, 1));
    int delta = 0;
    for (const auto& comp : components(induced(g, region))) delta = std::max(delta, brute::weak_diameter(g, comp));
    if (x != m.report.error_set) return where + ": error set mismatch";
    if (m.report.rounds != t + delta + 2) {
      return where + ": rounds " + std::to_string(m.report.rounds) + " != T + delta + 2 = " + std::to_string(t + delta + 2);
    }
    return std::nullopt;
  });
  if (res.pass) {
    std::size_t with_errors = 0;
    for (auto v : nonempty) with_errors += v;
    res.detail = std::to_string(cases) + " (instance, T) cases, " + std::to_string(with_errors) + " with non-empty error set";
  }
  return res;
}

Outcome genus_contract(const std::vector<Instance>& instances, const std::vector<int>& ts, int ratio_max_n) {
  const GenusMode modes[] = {GenusMode::kMaskedGlobal, GenusMode::kLocalBall};
  const std::size_t cases = instances.size() * ts.size() * 2;
  std::vector<std::pair<std::size_t, std::size_t>> ratios(cases, {0, 1});
  Outcome res = over(cases, [&](std::size_t c) -> Failure {
    const Instance& inst = instances[c / (ts.size() * 2)];
    const int t = ts[(c / 2) % ts.size()];
    const GenusMode mode = modes[c % 2];
    const Graph& g = inst.g;
    const std::string where = inst.name + " T=" + std::to_string(t) + (mode == GenusMode::kLocalBall ? " (local)" : " (masked)");
    const VertexSet d = genus_mds(g, t, mode);
    if (!dominates(g, d)) return where + ": output " + show(d) + " does not dominate";
    if (static_cast<int>(g.order()) <= ratio_max_n) {
      const std::size_t best = brute::opt(g, mds_problem()).size;
      ratios[c] = {d.size(), best};
      if (d.size() > 616 * best) return where + ": ratio " + decimal(d.size(), best) + " exceeds 616";
    }
    return std::nullopt;
  });
  if (res.pass) {
    MaxRatio worst;
    for (const auto& [num, den] : ratios) worst.offer(num, den);
    res.detail = std::to_string(cases) + " (instance, T, mode) cases, max ratio (n <= " + std::to_string(ratio_max_n) +
                 ") " + worst.str();
  }
  return res;
}

Outcome non_uniformity(const std::vector<int>& alphas) {
  // Selects exactly the vertices with a degree-one neighbour; on T_alpha that
  // is the depth-1 layer.
  LocalAlgorithm a;
  a.name = "leaf_parent";
  a.rounds = 1;
  a.decide = [](const BallView& v) {
    const int c = v.core.index_of(v.center);
    for (int w : v.core.neighbors(c)) {
      std::size_t degree = v.core.degree(w);
      if (const auto it = v.boundary_stubs.find(v.core.label(w)); it != v.boundary_stubs.end()) {
        degree += static_cast<std::size_t>(it->second);
      }
      if (degree == 1) return true;
    }
    return false;
  };
  std::ostringstream detail;
  for (int alpha : alphas) {
    const Graph g = tree_T_alpha(alpha);
    const VertexSet depth1 = tree_T_alpha_depth1(alpha);
    const std::string where = "T_" + std::to_string(alpha);
    if (run(g, a) != depth1) return {false, where + ": test algorithm does not select the depth-1 layer"};
    const std::size_t whole = opt(g, mds_problem()).size;
    if (whole != static_cast<std::size_t>(alpha + 1)) {
      return {false, where + ": opt = " + std::to_string(whole) + ", expected " + std::to_string(alpha + 1)};
    }
    const std::size_t layer = opt(g, mds_problem(), depth1, g.vertex_set()).size;
    if (layer != 1) return {false, where + ": opt(depth-1 layer) = " + std::to_string(layer) + ", expected 1"};
    const auto found = uniformity_check(g, a, mds_problem(), 0, Ratio{alpha, 1});
    const auto it = std::find_if(found.begin(), found.end(), [&](const Violation& v) { return v.s == depth1; });
    if (it == found.end()) return {false, where + ": violation on the depth-1 layer not found"};
    if (it->lhs != static_cast<std::size_t>(alpha + 1) || it->rhs.num != alpha || it->rhs.den != 1) {
      return {false, where + ": unexpected violation values lhs=" + std::to_string(it->lhs)};
    }
    detail << where << ": lhs " << it->lhs << " > rhs " << it->rhs.num << ", opt " << whole << "; ";
  }
  return {true, detail.str()};
}

// ---- covers and colorings --------------------------------------------------

Outcome balance(int grid_max, int path_max, const std::vector<int>& rs) {
  struct Case {
    std::string name;
    Graph g;
    int rows = 0;
    int cols = 0;
    int r = 1;
  };
  std::vector<Case> cases;
  for (int r : rs) {
    for (int n = 1; n <= path_max; ++n) cases.push_back({"path:" + std::to_string(n), path(n), 0, 0, r});
    for (int rows = 1; rows <= grid_max; ++rows) {
      for (int cols = rows; cols <= grid_max; cols += (cols < 6 ? 1 : 3)) {
        cases.push_back({"grid:" + std::to_string(rows) + "," + std::to_string(cols), grid(rows, cols), rows, cols, r});
      }
    }
  }
  Outcome res = over(cases.size(), [&](std::size_t i) -> Failure {
    const Case& c = cases[i];
    const int scale = 3 * c.r;
    const std::vector<VertexSet> cover =
        c.rows == 0 ? path_coloring(c.g, scale).classes : grid_coloring(c.g, c.rows, c.cols, scale).classes;
    const int f3r = max_class_diameter(c.g, cover, scale);
    const auto out = balance_cover(c.g, cover, c.r, f3r);
    const std::string where = c.name + " r=" + std::to_string(c.r);
    if (out.size() != cover.size()) return where + ": class count changed";
    const std::size_t q = c.g.order() / cover.size();
    VertexSet all;
    for (std::size_t k = 0; k < out.size(); ++k) {
      if (!cover[k].is_subset_of(out[k])) return where + ": class " + std::to_string(k) + " lost vertices";
      if (out[k].size() < q) return where + ": class " + std::to_string(k) + " has " + std::to_string(out[k].size()) + " < " + std::to_string(q);
      all = all.unite(out[k]);
    }
    if (all.size() != c.g.order()) return where + ": output is not a cover";
    const int diam = max_class_diameter(c.g, out, c.r);
    if (diam > f3r + 2 * c.r) return where + ": diameter " + std::to_string(diam) + " > " + std::to_string(f3r + 2 * c.r);
    return std::nullopt;
  });
  if (res.pass) res.detail = std::to_string(cases.size()) + " (graph, r) cases";
  return res;
}

Outcome path_colorings(int max_r, int max_len) {
  const std::size_t cases = static_cast<std::size_t>(max_r * max_len);
  Outcome res = over(cases, [&](std::size_t i) -> Failure {
    const int r = 1 + static_cast<int>(i) / max_len;
    const int n = 1 + static_cast<int>(i) % max_len;
    const Graph g = path(n);
    const BoundedColoring col = path_coloring(g, r);
    if (col.bound != r - 1) return "path:" + std::to_string(n) + " r=" + std::to_string(r) + ": claimed bound is not r-1";
    if (!verify_bounded(g, col)) {
      return "path:" + std::to_string(n) + " r=" + std::to_string(r) + ": diameter " +
             std::to_string(max_class_diameter(g, col.classes, r)) + " > " + std::to_string(col.bound);
    }
    return std::nullopt;
  });
  if (res.pass) res.detail = std::to_string(cases) + " (length, r) cases";
  return res;
}

Outcome grid_colorings(int max_r, int max_side) {
  const std::size_t per_r = static_cast<std::size_t>(max_side * max_side);
  const std::size_t cases = static_cast<std::size_t>(max_r) * per_r;
  std::vector<int> worst(cases, -1);
  over(cases, [&](std::size_t i) -> Failure {
    const int r = 1 + static_cast<int>(i / per_r);
    const int rows = 1 + static_cast<int>(i % per_r) / max_side;
    const int cols = 1 + static_cast<int>(i % per_r) % max_side;
    const Graph g = grid(rows, cols);
    const BoundedColoring col = grid_coloring(g, rows, cols, r);
    if (col.bound != 2 * (r - 1)) throw Error("claimed bound is not 2(r-1)");
    if (!verify_bounded(g, col)) worst[i] = max_class_diameter(g, col.classes, r);
    return std::nullopt;
  });
  std::ostringstream detail;
  bool pass = true;
  for (int r = 1; r <= max_r; ++r) {
    std::size_t failing = 0;
    int widest = -1;
    std::string first;
    for (std::size_t k = 0; k < per_r; ++k) {
      const std::size_t i = static_cast<std::size_t>(r - 1) * per_r + k;
      if (worst[i] < 0) continue;
      if (failing++ == 0) {
        first = std::to_string(1 + static_cast<int>(k) / max_side) + "x" + std::to_string(1 + static_cast<int>(k) % max_side);
      }
      widest = std::max(widest, worst[i]);
    }
    detail << "r=" << r << " bound " << 2 * (r - 1) << ": ";
    if (failing == 0) {
      detail << "ok";
    } else {
      pass = false;
      detail << failing << "/" << per_r << " grids fail (first " << first << ", widest " << widest << ")";
    }
    detail << (r < max_r ? "; " : "");
  }
  return {pass, detail.str()};
}

// ---- oracles ---------------------------------------------------------------

Outcome oracle_equivalence(int max_n, std::size_t random_count, std::uint64_t seed) {
  std::vector<Instance> graphs;
  for (int n = 1; n <= max_n; ++n) {
    graphs.push_back({"path:" + std::to_string(n), path(n)});
    graphs.push_back({"star:" + std::to_string(n - 1 > 0 ? n - 1 : 1), star(std::max(1, n - 1))});
    if (n >= 3) graphs.push_back({"cycle:" + std::to_string(n), cycle(n)});
  }
  for (const char* spec : {"grid:2,7", "grid:3,4", "grid:3,3", "complete:6", "complete_bipartite:3,3", "tree_T_alpha:1",
                           "torus_grid:3,3", "torus_grid:3,4", "projective_circulant:1", "projective_circulant:4",
                           "disjoint:complete:5;path:4"}) {
    graphs.push_back({spec, generate(spec)});
  }
  for (std::size_t i = 0; i < random_count; ++i) {
    const int n = 1 + static_cast<int>((seed + i) % static_cast<std::uint64_t>(max_n));
    const int p = 100 + static_cast<int>((i * 131) % 600);
    graphs.push_back({"random_graph:" + std::to_string(n) + "," + std::to_string(p) + "," + std::to_string(seed + i),
                      random_graph(n, p, seed + i)});
  }
  const LocalProblem problems[] = {mds_problem(), ktuple_problem(2), ktuple_problem(3), distance_ds_problem(2),
                                   distance_ds_problem(3)};
  const std::size_t cases = graphs.size() * 5;
  Outcome res = over(cases, [&](std::size_t c) -> Failure {
    const Instance& inst = graphs[c / 5];
    const LocalProblem& p = problems[c % 5];
    const Graph& g = inst.g;
    SplitMix64 rng(seed ^ (c * 0x9E37u));
    const VertexSet all = g.vertex_set();
    const VertexSet some = random_subset(rng, g, g.order());
    std::vector<std::pair<VertexSet, VertexSet>> variants = {{all, all}, {some, all}, {some, ball(g, some, p.rho)}};
    VertexSet cand = random_subset(rng, g, g.order());
    variants.emplace_back(some, cand);
    for (const auto& [targets, candidates] : variants) {
      std::optional<OptResult> fast;
      std::optional<OptResult> slow;
      try {
        fast = opt(g, p, targets, candidates);
      } catch (const Infeasible&) {
      }
      try {
        slow = brute::opt(g, p, targets, candidates);
      } catch (const Infeasible&) {
      }
      const std::string where = inst.name + " (" + p.name + ") targets=" + show(targets) + " candidates=" + show(candidates);
      if (fast.has_value() != slow.has_value()) return where + ": feasibility disagrees";
      if (fast && (fast->size != slow->size || fast->witness != slow->witness)) {
        return where + ": branch and bound " + show(fast->witness) + " vs enumeration " + show(slow->witness);
      }
    }
    return std::nullopt;
  });
  if (res.pass) res.detail = std::to_string(cases * 4) + " (graph, problem, targets, candidates) cases, n <= " + std::to_string(max_n);
  return res;
}

Outcome planarity_vs_kuratowski(std::size_t count, int max_n, std::uint64_t seed) {
  std::vector<Instance> graphs;
  for (const char* spec : {"complete:5", "complete_bipartite:3,3", "projective_circulant:1", "torus_grid:3,3", "grid:2,4"}) {
    graphs.push_back({spec, generate(spec)});
  }
  for (std::size_t i = 0; graphs.size() < count; ++i) {
    const int n = 1 + static_cast<int>((seed + i) % static_cast<std::uint64_t>(max_n));
    const int p = 50 + static_cast<int>((i * 97) % 900);
    graphs.push_back({"random_graph:" + std::to_string(n) + "," + std::to_string(p) + "," + std::to_string(seed + i),
                      random_graph(n, p, seed + i)});
  }
  std::vector<char> planar(graphs.size());
  Outcome res = over(graphs.size(), [&](std::size_t i) -> Failure {
    if (graphs[i].g.order() > 10) return std::nullopt;
    const bool lr = is_planar(graphs[i].g);
    planar[i] = lr ? 1 : 0;
    if (lr == brute::has_kuratowski_subdivision(graphs[i].g)) {
      return graphs[i].name + ": is_planar says " + (lr ? "planar" : "non-planar") + ", Kuratowski search disagrees";
    }
    return std::nullopt;
  });
  if (res.pass) {
    std::size_t yes = 0;
    for (char c : planar) yes += static_cast<std::size_t>(c);
    res.detail = std::to_string(graphs.size()) + " graphs (" + std::to_string(yes) + " planar), n <= " + std::to_string(max_n);
  }
  return res;
}

Outcome order_invariance(const std::vector<Instance>& instances, std::size_t count, std::uint64_t seed) {
  if (instances.empty()) return {false, "no instances"};
  const LocalAlgorithm a = planar_mds();
  Outcome res = over(count, [&](std::size_t i) -> Failure {
    const Instance& inst = instances[(i * 7919) % instances.size()];
    SplitMix64 rng(seed + i);
    std::map<Label, Label> mapping;
    Label next = rng.below(1000);
    for (Label v : inst.g.labels()) {
      mapping.emplace(v, next);
      next += 1 + rng.below(1000);
    }
    if (!order_invariance_check(inst.g, a, mapping)) return inst.name + ": relabelled run differs";
    return std::nullopt;
  });
  if (res.pass) res.detail = std::to_string(count) + " random order-preserving relabellings";
  return res;
}

Outcome additive_wrapper(int max_n) {
  std::vector<Instance> graphs;
  for (int n : {1, 2, 4, 7, 12, 20, 30}) {
    if (n <= max_n) graphs.push_back({"path:" + std::to_string(n), path(n)});
  }
  for (int n : {3, 5, 8, 13, 21, 30}) {
    if (n <= max_n) graphs.push_back({"cycle:" + std::to_string(n), cycle(n)});
  }
  for (int n : {5, 10, 16, 20, 30}) {
    for (std::uint64_t s = 1; s <= 3; ++s) {
      if (n <= max_n) graphs.push_back({"random_tree:" + std::to_string(n) + "," + std::to_string(s), random_tree(n, s)});
    }
  }
  for (const char* spec : {"disjoint:path:1;path:3;cycle:5;random_tree:9,4", "disjoint:path:25;cycle:4;star:3"}) {
    graphs.push_back({spec, generate(spec)});
  }
  const LocalAlgorithm inner = planar_mds();
  const LocalProblem p = mds_problem();
  const std::pair<int, Ratio> params[] = {{0, {1, 1}}, {1, {1, 1}}, {1, {1, 2}}, {2, {1, 1}}, {3, {1, 1}}, {5, {1, 1}}, {10, {1, 1}}};
  const std::size_t cases = graphs.size() * std::size(params);
  std::vector<std::size_t> exact(cases), deferred(cases);
  Outcome res = over(cases, [&](std::size_t c) -> Failure {
    const Instance& inst = graphs[c / std::size(params)];
    const auto& [beta, eps] = params[c % std::size(params)];
    const int b = wrap_radius(beta, eps);
    const LocalAlgorithm wrapped = wrap_additive(inner, p, Ratio{1, 1}, beta, eps);
    if (wrapped.rounds != std::max(inner.rounds, b) + 1) return inst.name + ": wrong round count";
    const Graph& g = inst.g;
    const VertexSet out = run(g, wrapped);
    const VertexSet base = run(g, inner);
    const std::string where = inst.name + " B=" + std::to_string(b);
    for (const auto& comp : components(g)) {
      const Graph h = induced(g, comp);
      const int diam = brute::weak_diameter(h, comp);
      const VertexSet mine = out.intersect(comp);
      if (diam < b) {
        const OptResult best = opt(h, p);
        if (mine != best.witness) return where + ": component " + show(comp) + " got " + show(mine) + ", optimum " + show(best.witness);
        if (h.order() <= 20 && mine.size() != brute::opt(h, p).size) return where + ": component solution not optimal";
        ++exact[c];
      } else {
        if (mine != base.intersect(comp)) return where + ": component " + show(comp) + " differs from the inner algorithm";
        ++deferred[c];
      }
    }
    return std::nullopt;
  });
  if (res.pass) {
    std::size_t e = 0;
    std::size_t d = 0;
    for (std::size_t c = 0; c < cases; ++c) {
      e += exact[c];
      d += deferred[c];
    }
    res.detail = std::to_string(cases) + " (graph, B) cases: " + std::to_string(e) + " components solved exactly, " +
                 std::to_string(d) + " deferred";
  }
  return res;
}

Outcome niceness(const std::vector<int>& ts) {
  struct Case {
    std::string spec;
    int genus;
  };
  std::vector<Case> family;
  for (int a = 3; a <= 5; ++a) {
    for (int b = 3; b <= 5; ++b) family.push_back({"torus_grid:" + std::to_string(a) + "," + std::to_string(b), 2});
  }
  for (int g = 1; g <= 4; ++g) family.push_back({"projective_circulant:" + std::to_string(g), 1});
  const std::size_t cases = family.size() * ts.size();
  Outcome res = over(cases, [&](std::size_t c) -> Failure {
    const Case& fc = family[c / ts.size()];
    const int t = ts[c % ts.size()];
    const Graph g = generate(fc.spec);
    const std::string where = fc.spec + " T=" + std::to_string(t);
    const VertexSet x = error_set(g, t, planar_class());
    if (!x.is_subset_of(error_set(g, t + 1, planar_class()))) return where + ": error set not monotone in T";
    const int delta = niceness_bound_check(g, t, planar_class(), 1);
    const int bound = genus_niceness_bound(fc.genus, t, 1);
    if (delta >= bound) return where + ": delta " + std::to_string(delta) + " >= " + std::to_string(bound);
    return std::nullopt;
  });
  if (res.pass) res.detail = std::to_string(cases) + " (instance, T) cases within the genus bound";
  return res;
}

}  // namespace ldl::checks
