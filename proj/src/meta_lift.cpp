#include "ldl/meta_lift.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ldl/generators.hpp"
#include "ldl/planar_mds.hpp"

namespace ldl {

// ---- configuration ---------------------------------------------------------

std::string serialize(const LiftConfig& cfg) {
  std::ostringstream out;
  out << "T=" << cfg.T << "\nrho=" << cfg.rho << "\nr=" << cfg.r << "\ndelta_cap=" << cfg.delta_cap
      << "\nclass=" << cfg.cls.name << '\n';
  return out.str();
}

LiftConfig parse_lift_config(const std::string& text) {
  LiftConfig cfg;
  std::istringstream in(text);
  std::string line;
  auto integer = [](const std::string& key, const std::string& value) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(value, &used);
      if (used == value.size()) return v;
    } catch (const std::logic_error&) {
    }
    throw InvalidInput("bad value for " + key + ": '" + value + "'");
  };
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw InvalidInput("expected key=value, got '" + line + "'");
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);
    if (key == "T") {
      cfg.T = integer(key, value);
    } else if (key == "rho") {
      cfg.rho = integer(key, value);
    } else if (key == "r") {
      cfg.r = integer(key, value);
    } else if (key == "delta_cap") {
      cfg.delta_cap = integer(key, value);
    } else if (key == "class") {
      if (value != "planar") throw InvalidInput("unknown class '" + value + "'");
      cfg.cls = planar_class();
    } else {
      throw InvalidInput("unknown config key '" + key + "'");
    }
  }
  return cfg;
}

void validate(const LiftConfig& cfg) {
  if (cfg.rho < 1 || cfg.r < 0 || cfg.delta_cap < 0) throw InvalidInput("lift config needs rho >= 1, r >= 0, delta_cap >= 0");
  if (cfg.T < std::max(cfg.r, cfg.rho)) throw InvalidInput("lift config needs T >= max(r, rho)");
  if (!cfg.cls.test) throw InvalidInput("lift config has no class predicate");
}

// ---- Algorithm 3 -----------------------------------------------------------

MetaResult meta_b(const Graph& g, const LocalAlgorithm& a, const LocalProblem& p, const LiftConfig& cfg) {
  validate(cfg);
  MetaResult res;
  MetaReport& rep = res.report;
  rep.error_set = error_set(g, cfg.T, cfg.cls);
  if (!p.additive && !rep.error_set.empty()) throw AdditivityRequired();

  rep.kept = run(g, a).minus(rep.error_set);
  rep.unsatisfied = unsatisfied(g, p, rep.kept, g.vertex_set());

  // Unsatisfied targets normally sit next to X; the extra N^rho[U] term only
  // matters for inner algorithms that are wrong away from X.
  const VertexSet region = ball(g, rep.error_set, 2 * cfg.rho).unite(ball(g, rep.unsatisfied, cfg.rho));
  std::vector<Label> patch;
  for (const auto& comp : components(induced(g, region))) {
    const int diam = weak_diameter(g, comp);
    rep.component_diameters.push_back(diam);
    rep.delta = std::max(rep.delta, diam);
    if (diam > cfg.delta_cap) {
      throw NicenessViolated("component of weak diameter " + std::to_string(diam) + " exceeds cap " +
                             std::to_string(cfg.delta_cap));
    }
    const VertexSet targets = rep.unsatisfied.intersect(comp);
    if (targets.empty()) continue;
    const auto w = opt(g, p, targets, comp).witness;
    patch.insert(patch.end(), w.begin(), w.end());
  }
  rep.patch = VertexSet(std::move(patch));
  rep.rounds = cfg.T + rep.delta + 2;
  res.solution = rep.kept.unite(rep.patch);
  return res;
}

// ---- Algorithm 2 -----------------------------------------------------------

GenusResult genus_mds_trace(const Graph& g, int T, GenusMode mode) {
  if (T < 0) throw InvalidInput("T must be >= 0");
  GenusResult res;
  const LocalAlgorithm a = planar_mds();
  const VertexSet bad = error_set(g, T, planar_class());
  if (mode == GenusMode::kMaskedGlobal) {
    res.step_one = run(g, a).minus(bad);
  } else {
    std::vector<Label> picked;
    for (Label u : g.labels()) {
      if (bad.contains(u)) continue;
      const Graph local = induced(g, ball(g, u, T));
      if (a.decide(collect_view(local, u, a.rounds))) picked.push_back(u);
    }
    res.step_one = VertexSet::from_sorted(std::move(picked));
  }

  res.undominated = g.vertex_set().minus(ball(g, res.step_one, 1));
  res.hop_components = khop_components(g, res.undominated, 2);
  std::vector<Label> added;
  for (const auto& part : res.hop_components) {
    const VertexSet d = opt(g, mds_problem(), part, ball(g, part, 1)).witness;
    for (Label u : part) {
      const VertexSet mine = ball(g, u, 1).intersect(d);
      added.insert(added.end(), mine.begin(), mine.end());
    }
  }
  res.solution = res.step_one.unite(VertexSet(std::move(added)));
  return res;
}

VertexSet genus_mds(const Graph& g, int T, GenusMode mode) { return genus_mds_trace(g, T, mode).solution; }

// ---- cutting ---------------------------------------------------------------

namespace {

// Shortest v-y path in g, stepping to the smallest-label closer neighbour.
std::vector<Label> shortest_path(const Graph& g, Label v, Label y) {
  const int yi = g.index_of(y);
  const auto dist = bfs_indices(g, std::span<const int>(&yi, 1));
  int cur = g.index_of(v);
  if (dist[static_cast<std::size_t>(cur)] < 0) throw InfiniteDiameter();
  std::vector<Label> path{v};
  while (cur != yi) {
    for (int w : g.neighbors(cur)) {
      if (dist[static_cast<std::size_t>(w)] == dist[static_cast<std::size_t>(cur)] - 1) {
        cur = w;
        break;
      }
    }
    path.push_back(g.label(cur));
  }
  return path;
}

VertexSet distance_cut(const Graph& g, const VertexSet& x, int d) {
  const LocalProblem p = distance_ds_problem(d);
  const VertexSet dom = opt(g, p, x, ball(g, x, d)).witness;
  VertexSet y = x;
  for (;;) {
    const Graph gy = induced(g, y);
    const VertexSet inside = dom.intersect(y);
    std::vector<int> sources;
    for (Label s : inside) sources.push_back(gy.index_of(s));
    const auto dist = bfs_indices(gy, sources, d);
    Label missing = 0;
    bool found = false;
    for (Label v : x) {
      if (dist[static_cast<std::size_t>(gy.index_of(v))] < 0) {
        missing = v;
        found = true;
        break;
      }
    }
    if (!found) return y;
    for (Label target : dom) {
      const int dv = distance(g, missing, target);
      if (dv >= 0 && dv <= d) {
        for (Label w : shortest_path(g, missing, target)) y.insert(w);
        break;
      }
    }
  }
}

}  // namespace

VertexSet cut_targets(const Graph& g, const VertexSet& x, const LocalProblem& p) {
  for (Label v : x) g.index_of(v);
  if (p.rule.radius == 1) return x.unite(opt(g, p, x, ball(g, x, p.rho)).witness);
  if (p.rule.demand == 1) return distance_cut(g, x, p.rule.radius);
  throw InvalidInput("cutting not supported for problem '" + p.name + "'");
}

Graph cut_around(const Graph& g, const VertexSet& s, int k, const LocalProblem& p) {
  return induced(g, cut_targets(g, ball(g, s, k), p));
}

// ---- uniformity ------------------------------------------------------------

namespace {

class UniformityProbe {
 public:
  UniformityProbe(const Graph& g, const LocalAlgorithm& a, const LocalProblem& p, int k, Ratio alpha)
      : g_(g), p_(p), k_(k), alpha_(alpha), selected_(run(g, a)), all_(g.vertex_set()) {
    if (k < 0) throw InvalidInput("k must be >= 0");
    if (alpha.den <= 0 || alpha.num < 0) throw InvalidInput("alpha must be a non-negative ratio");
  }

  void test(const VertexSet& s) {
    const std::size_t lhs = selected_.intersect(s).size();
    if (lhs == 0) return;
    const VertexSet targets = ball(g_, s, k_);
    auto it = cache_.find(targets);
    if (it == cache_.end()) it = cache_.emplace(targets, opt(g_, p_, targets, all_).size).first;
    const auto optimum = static_cast<std::int64_t>(it->second);
    if (static_cast<std::int64_t>(lhs) * alpha_.den > alpha_.num * optimum) {
      found_.push_back({s, lhs, Ratio{alpha_.num * optimum, alpha_.den}});
    }
  }

  std::vector<Violation> take() {
    std::sort(found_.begin(), found_.end(), [](const Violation& a, const Violation& b) { return a.s < b.s; });
    found_.erase(std::unique(found_.begin(), found_.end(), [](const Violation& a, const Violation& b) { return a.s == b.s; }),
                 found_.end());
    return std::move(found_);
  }

 private:
  const Graph& g_;
  const LocalProblem& p_;
  int k_;
  Ratio alpha_;
  VertexSet selected_;
  VertexSet all_;
  std::map<VertexSet, std::size_t> cache_;
  std::vector<Violation> found_;
};

}  // namespace

std::vector<Violation> uniformity_check(const Graph& g, const LocalAlgorithm& a, const LocalProblem& p, int k,
                                        Ratio alpha, const UniformityOptions& options) {
  if (options.samples < 1) throw InvalidInput("samples must be >= 1");
  UniformityProbe probe(g, a, p, k, alpha);
  const std::size_t n = g.order();
  std::size_t min_size = 0;
  if (options.min_frac) {
    const Ratio f = *options.min_frac;
    if (f.den <= 0 || f.num < 0) throw InvalidInput("min_frac must be a non-negative ratio");
    min_size = static_cast<std::size_t>(f.num * static_cast<std::int64_t>(n) / f.den);
  }
  auto consider = [&](const VertexSet& s) {
    if (s.size() >= min_size) probe.test(s);
  };

  if (n <= 12) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<Label> s;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1u) s.push_back(g.label(static_cast<int>(i)));
      }
      consider(VertexSet::from_sorted(std::move(s)));
    }
    return probe.take();
  }

  SplitMix64 rng(options.seed);
  for (std::size_t t = 0; t < options.samples; ++t) {
    std::vector<Label> s;
    for (Label v : g.labels()) {
      if (rng.next() & 1u) s.push_back(v);
    }
    consider(VertexSet::from_sorted(std::move(s)));
  }
  for (Label v : g.labels()) {
    VertexSet inner;
    for (int j = 0; j <= 2; ++j) {
      const VertexSet b = ball(g, v, j);
      consider(b);
      if (j > 0) consider(b.minus(inner));
      inner = b;
    }
  }
  return probe.take();
}

std::vector<Violation> uniformity_check(const Graph& g, const LocalAlgorithm& a, const LocalProblem& p, int k,
                                        Ratio alpha, const std::vector<VertexSet>& subsets) {
  UniformityProbe probe(g, a, p, k, alpha);
  for (const auto& s : subsets) {
    for (Label v : s) g.index_of(v);
    probe.test(s);
  }
  return probe.take();
}

// ---- additive wrapper ------------------------------------------------------

int wrap_radius(int beta, Ratio eps) {
  if (eps.num <= 0 || eps.den <= 0) throw InvalidInput("eps must be > 0");
  if (beta < 0) throw InvalidInput("beta must be >= 0");
  const std::int64_t top = 3 * static_cast<std::int64_t>(beta) * eps.den;
  return static_cast<int>((top + eps.num - 1) / eps.num);
}

LocalAlgorithm wrap_additive(const LocalAlgorithm& a, const LocalProblem& p, Ratio alpha, int beta, Ratio eps) {
  (void)alpha;
  const int b = wrap_radius(beta, eps);
  LocalAlgorithm out;
  out.name = "wrapped:" + a.name;
  out.rounds = std::max(a.rounds, b) + 1;
  out.needs_polynomial_ids = a.needs_polynomial_ids;
  out.decide = [a, p, b](const BallView& view) {
    const BallView near = restrict_view(view, b);
    if (near.boundary_stubs.empty()) {
      const Graph& comp = near.core;
      int diam = 0;
      for (Label v : comp.labels()) diam = std::max(diam, eccentricity(comp, v));
      if (diam < b) return opt(comp, p).witness.contains(view.center);
    }
    return a.decide(restrict_view(view, a.rounds));
  };
  return out;
}

// ---- balanced cover --------------------------------------------------------

std::vector<VertexSet> balance_cover(const Graph& g, const std::vector<VertexSet>& cover, int r, int f3r) {
  if (r < 1) throw InvalidInput("r must be >= 1");
  if (cover.empty()) throw InvalidInput("cover needs at least one class");
  VertexSet covered;
  for (const auto& cls : cover) {
    for (Label v : cls) g.index_of(v);
    covered = covered.unite(cls);
    for (const auto& comp : khop_components(g, cls, 3 * r)) {
      if (weak_diameter(g, comp) > f3r) throw InvalidInput("invalid control coloring");
    }
  }
  if (covered.size() != g.order()) throw InvalidInput("classes do not cover the vertex set");

  const std::size_t q = g.order() / cover.size();
  std::vector<VertexSet> out = cover;
  for (std::size_t i = 0; i < cover.size(); ++i) {
    const VertexSet& ci = cover[i];
    if (ci.size() >= q) continue;
    const std::size_t s = q - ci.size();
    const VertexSet near = ball(g, ci, r);
    const VertexSet a = near.minus(ci);
    VertexSet pool;
    if (a.size() >= s) {
      pool = a;
    } else {
      const VertexSet far = g.vertex_set().minus(near);
      std::size_t best = cover.size();
      for (std::size_t j = 0; j < cover.size(); ++j) {
        if (j == i) continue;
        if (best == cover.size() || cover[j].intersect(far).size() > cover[best].intersect(far).size()) best = j;
      }
      if (best < cover.size()) pool = cover[best].intersect(far);
      if (pool.size() < s) throw Error("balanced cover: no class can donate enough vertices");
    }
    std::vector<Label> extra(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(s));
    out[i] = ci.unite(VertexSet::from_sorted(std::move(extra)));
  }
  return out;
}

}  // namespace ldl
