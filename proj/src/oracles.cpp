#include "ldl/oracles.hpp"

#include <algorithm>
#include <climits>

namespace ldl {

namespace {

bool rule_feasible(const Graph& g, const CoverRule& rule, const VertexSet& selection, const VertexSet& targets) {
  const std::vector<Label> sel = selection.items();
  std::vector<int> sources;
  for (Label s : sel) {
    if (const int i = g.find(s); i >= 0) sources.push_back(i);
  }
  for (Label t : targets) {
    if (selection.contains(t)) continue;
    const int ti = g.index_of(t);
    const auto dist = bfs_indices(g, std::span<const int>(&ti, 1), rule.radius);
    int hits = 0;
    for (int s : sources) hits += dist[static_cast<std::size_t>(s)] >= 1 ? 1 : 0;
    if (hits < rule.demand) return false;
  }
  return true;
}

LocalProblem cover_problem(std::string name, int rho, CoverRule rule) {
  LocalProblem p;
  p.name = std::move(name);
  p.rho = rho;
  p.additive = true;
  p.rule = rule;
  p.is_feasible = [rule](const Graph& g, const VertexSet& s, const VertexSet& t) { return rule_feasible(g, rule, s, t); };
  return p;
}

// Covering instance over candidate and target indices. Phase one finds the
// optimum size by branch and bound; phase two finds the lexicographically
// first solution of that size by scanning candidates in label order.
class CoverSolver {
 public:
  CoverSolver(const Graph& g, const LocalProblem& p, const VertexSet& targets, const VertexSet& candidates,
              Deadline deadline)
      : demand_(p.rule.demand), deadline_(deadline) {
    cand_ = candidates.items();
    tgt_ = targets.items();
    for (Label c : cand_) g.index_of(c);
    const std::size_t nc = cand_.size();
    const std::size_t nt = tgt_.size();
    std::vector<int> cand_of(g.order(), -1);
    for (std::size_t c = 0; c < nc; ++c) cand_of[static_cast<std::size_t>(g.index_of(cand_[c]))] = static_cast<int>(c);

    self_.assign(nt, -1);
    nbr_opts_.assign(nt, {});
    hits_.assign(nc, {});
    self_of_.assign(nc, -1);
    for (std::size_t t = 0; t < nt; ++t) {
      const int ti = g.index_of(tgt_[t]);
      const auto dist = bfs_indices(g, std::span<const int>(&ti, 1), p.rule.radius);
      for (std::size_t v = 0; v < dist.size(); ++v) {
        const int c = cand_of[v];
        if (c < 0 || dist[v] < 0) continue;
        if (dist[v] == 0) {
          self_[t] = c;
          self_of_[static_cast<std::size_t>(c)] = static_cast<int>(t);
        } else {
          nbr_opts_[t].push_back(c);
          hits_[static_cast<std::size_t>(c)].push_back(static_cast<int>(t));
        }
      }
    }
    count_.assign(nt, 0);
    self_sat_.assign(nt, 0);
    chosen_.assign(nc, 0);
    banned_.assign(nc, 0);
    mark_.assign(nc, 0);
    unsat_ = nt;
  }

  OptResult solve() {
    if (unsat_ == 0) return {};
    const int greedy = greedy_upper_bound();
    if (greedy < 0) throw Infeasible();
    best_ = greedy;
    bnb(0);
    k_ = best_;
    floor_ = 0;
    std::fill(banned_.begin(), banned_.end(), 0);
    if (!lex(0, 0)) throw Infeasible();  // unreachable: a solution of size best_ exists
    std::vector<Label> out;
    for (std::size_t c = 0; c < cand_.size(); ++c) {
      if (chosen_[c]) out.push_back(cand_[c]);
    }
    return {out.size(), VertexSet::from_sorted(std::move(out))};
  }

 private:
  bool sat(std::size_t t) const { return self_sat_[t] || count_[t] >= demand_; }
  bool avail(int c) const {
    const auto i = static_cast<std::size_t>(c);
    return !chosen_[i] && !banned_[i] && c >= floor_;
  }

  void select(int c) {
    const auto i = static_cast<std::size_t>(c);
    chosen_[i] = 1;
    if (const int t = self_of_[i]; t >= 0) {
      const bool was = sat(static_cast<std::size_t>(t));
      self_sat_[static_cast<std::size_t>(t)] = 1;
      if (!was) --unsat_;
    }
    for (int t : hits_[i]) {
      const auto ti = static_cast<std::size_t>(t);
      const bool was = sat(ti);
      ++count_[ti];
      if (!was && sat(ti)) --unsat_;
    }
  }

  void deselect(int c) {
    const auto i = static_cast<std::size_t>(c);
    chosen_[i] = 0;
    if (const int t = self_of_[i]; t >= 0) {
      const bool was = sat(static_cast<std::size_t>(t));
      self_sat_[static_cast<std::size_t>(t)] = 0;
      if (was && !sat(static_cast<std::size_t>(t))) ++unsat_;
    }
    for (int t : hits_[i]) {
      const auto ti = static_cast<std::size_t>(t);
      const bool was = sat(ti);
      --count_[ti];
      if (was && !sat(ti)) ++unsat_;
    }
  }

  // Selections still needed by target t alone; INT_MAX if it cannot be met.
  int need(std::size_t t) const {
    if (sat(t)) return 0;
    if (self_[t] >= 0 && avail(self_[t])) return 1;
    const int missing = demand_ - count_[t];
    int free = 0;
    for (int c : nbr_opts_[t]) free += avail(c) ? 1 : 0;
    return free >= missing ? missing : INT_MAX;
  }

  int available_options(std::size_t t) const {
    int k = (self_[t] >= 0 && avail(self_[t])) ? 1 : 0;
    for (int c : nbr_opts_[t]) k += avail(c) ? 1 : 0;
    return k;
  }

  // Lower bound on further selections, or INT_MAX when some target is dead.
  // Unsatisfied targets with pairwise disjoint option sets each need their
  // own selection; a single target may need several.
  int lower_bound() {
    ++stamp_;
    int packed = 0;
    int single = 0;
    for (std::size_t t = 0; t < tgt_.size(); ++t) {
      const int n = need(t);
      if (n == 0) continue;
      if (n == INT_MAX) return INT_MAX;
      single = std::max(single, n);
      bool clash = self_[t] >= 0 && avail(self_[t]) && mark_[static_cast<std::size_t>(self_[t])] == stamp_;
      for (int c : nbr_opts_[t]) {
        if (clash) break;
        clash = avail(c) && mark_[static_cast<std::size_t>(c)] == stamp_;
      }
      if (clash) continue;
      ++packed;
      if (self_[t] >= 0 && avail(self_[t])) mark_[static_cast<std::size_t>(self_[t])] = stamp_;
      for (int c : nbr_opts_[t]) {
        if (avail(c)) mark_[static_cast<std::size_t>(c)] = stamp_;
      }
    }
    return std::max(packed, single);
  }

  int gain(int c) const {
    const auto i = static_cast<std::size_t>(c);
    int g = 0;
    if (const int t = self_of_[i]; t >= 0 && !sat(static_cast<std::size_t>(t))) ++g;
    for (int t : hits_[i]) g += sat(static_cast<std::size_t>(t)) ? 0 : 1;
    return g;
  }

  int greedy_upper_bound() {
    std::vector<int> picked;
    while (unsat_ > 0) {
      int best = -1;
      int best_gain = 0;
      for (int c = 0; c < static_cast<int>(cand_.size()); ++c) {
        if (chosen_[static_cast<std::size_t>(c)]) continue;
        const int g = gain(c);
        if (g > best_gain) {
          best_gain = g;
          best = c;
        }
      }
      if (best < 0) break;
      select(best);
      picked.push_back(best);
    }
    const int size = unsat_ == 0 ? static_cast<int>(picked.size()) : -1;
    for (auto it = picked.rbegin(); it != picked.rend(); ++it) deselect(*it);
    return size;
  }

  void tick() {
    if (deadline_ && (++nodes_ & 0xFFF) == 0 && std::chrono::steady_clock::now() > *deadline_) throw OracleTimeout();
  }

  void bnb(int size) {
    tick();
    if (unsat_ == 0) {
      best_ = std::min(best_, size);
      return;
    }
    const int lb = lower_bound();
    if (lb == INT_MAX || size + lb >= best_) return;

    std::size_t pick = tgt_.size();
    int fewest = INT_MAX;
    for (std::size_t t = 0; t < tgt_.size(); ++t) {
      if (sat(t)) continue;
      const int k = available_options(t);
      if (k < fewest) {
        fewest = k;
        pick = t;
      }
    }
    std::vector<int> options;
    if (self_[pick] >= 0 && avail(self_[pick])) options.push_back(self_[pick]);
    for (int c : nbr_opts_[pick]) {
      if (avail(c)) options.push_back(c);
    }
    std::vector<std::pair<int, int>> ranked;
    for (int c : options) ranked.emplace_back(-gain(c), c);
    std::sort(ranked.begin(), ranked.end());

    std::vector<int> banned_here;
    for (const auto& [neg_gain, c] : ranked) {
      select(c);
      bnb(size + 1);
      deselect(c);
      // With demand 1, later branches may assume this option is unused.
      // Higher demands need several options together, so nothing is banned.
      if (demand_ == 1) {
        banned_[static_cast<std::size_t>(c)] = 1;
        banned_here.push_back(c);
      }
      if (size + 1 >= best_) break;
    }
    for (int c : banned_here) banned_[static_cast<std::size_t>(c)] = 0;
  }

  bool helps(int c) const { return gain(c) > 0; }

  bool lex(int pos, int size) {
    tick();
    if (unsat_ == 0) return true;
    if (size >= k_) return false;
    floor_ = pos;
    int limit = INT_MAX;
    for (std::size_t t = 0; t < tgt_.size(); ++t) {
      if (sat(t)) continue;
      int top = -1;
      if (self_[t] >= 0 && avail(self_[t])) top = self_[t];
      for (int c : nbr_opts_[t]) {
        if (avail(c)) top = std::max(top, c);
      }
      if (top < 0) return false;
      limit = std::min(limit, top);
    }
    const int lb = lower_bound();
    if (lb == INT_MAX || size + lb > k_) return false;
    for (int c = pos; c <= limit; ++c) {
      if (!helps(c)) continue;
      select(c);
      if (lex(c + 1, size + 1)) return true;
      deselect(c);
      floor_ = pos;
    }
    return false;
  }

  int demand_;
  Deadline deadline_;
  std::vector<Label> cand_, tgt_;
  std::vector<int> self_;
  std::vector<std::vector<int>> nbr_opts_;
  std::vector<std::vector<int>> hits_;
  std::vector<int> self_of_;
  std::vector<int> count_;
  std::vector<char> self_sat_, chosen_, banned_;
  std::vector<unsigned> mark_;
  unsigned stamp_ = 0;
  std::size_t unsat_ = 0;
  int best_ = 0;
  int k_ = 0;
  int floor_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

LocalProblem mds_problem() { return cover_problem("mds", 1, CoverRule{1, 1}); }

LocalProblem ktuple_problem(int k) {
  if (k < 1) throw InvalidInput("k-tuple domination needs k >= 1");
  return cover_problem("ktuple:" + std::to_string(k), 1, CoverRule{1, k});
}

LocalProblem distance_ds_problem(int d) {
  if (d < 1) throw InvalidInput("distance domination needs d >= 1");
  return cover_problem("distance:" + std::to_string(d), d, CoverRule{d, 1});
}

bool satisfies(const Graph& g, const LocalProblem& p, const VertexSet& selection, Label t) {
  return rule_feasible(g, p.rule, selection, VertexSet{t});
}

VertexSet unsatisfied(const Graph& g, const LocalProblem& p, const VertexSet& selection, const VertexSet& targets) {
  std::vector<Label> out;
  for (Label t : targets) {
    if (!satisfies(g, p, selection, t)) out.push_back(t);
  }
  return VertexSet::from_sorted(std::move(out));
}

OptResult opt(const Graph& g, const LocalProblem& p, const VertexSet& targets, const VertexSet& candidates,
              Deadline deadline) {
  for (Label t : targets) g.index_of(t);
  return CoverSolver(g, p, targets, candidates, deadline).solve();
}

OptResult opt(const Graph& g, const LocalProblem& p, Deadline deadline) {
  const VertexSet all = g.vertex_set();
  return opt(g, p, all, all, deadline);
}

VertexSet strictly_dominated(const Graph& h) {
  std::vector<Label> out;
  for (int v = 0; v < static_cast<int>(h.order()); ++v) {
    std::vector<int> nv(h.neighbors(v).begin(), h.neighbors(v).end());
    nv.insert(std::upper_bound(nv.begin(), nv.end(), v), v);
    for (int w : h.neighbors(v)) {
      if (h.degree(w) <= h.degree(v)) continue;
      std::vector<int> nw(h.neighbors(w).begin(), h.neighbors(w).end());
      nw.insert(std::upper_bound(nw.begin(), nw.end(), w), w);
      if (std::includes(nw.begin(), nw.end(), nv.begin(), nv.end())) {
        out.push_back(h.label(v));
        break;
      }
    }
  }
  return VertexSet::from_sorted(std::move(out));
}

VertexSet best_nice_mds(const Graph& h, const VertexSet& targets) {
  const VertexSet eligible = h.vertex_set().minus(strictly_dominated(h));
  return opt(h, mds_problem(), targets, eligible).witness;
}

}  // namespace ldl
