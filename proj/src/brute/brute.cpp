#include "brute.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <functional>
#include <numeric>

#include "ldl/error.hpp"

namespace ldl::brute {

OptResult opt(const Graph& g, const LocalProblem& p, const VertexSet& targets, const VertexSet& candidates) {
  const std::vector<Label>& pool = candidates.items();
  const std::size_t n = pool.size();
  if (n > 24) throw InvalidInput("brute-force opt limited to 24 candidates");
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<std::size_t> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
      std::vector<Label> s;
      for (std::size_t i : pick) s.push_back(pool[i]);
      VertexSet chosen = VertexSet::from_sorted(std::move(s));
      if (p.is_feasible(g, chosen, targets)) return {k, std::move(chosen)};
      // Next k-combination in lexicographic order.
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw Infeasible();
}

OptResult opt(const Graph& g, const LocalProblem& p) {
  const VertexSet all = g.vertex_set();
  return brute::opt(g, p, all, all);
}

namespace {

class SubdivisionSearch {
 public:
  explicit SubdivisionSearch(const Graph& g) : g_(g), n_(static_cast<int>(g.order())), used_(g.order(), 0) {}

  bool found() {
    std::vector<int> verts(static_cast<std::size_t>(n_));
    std::iota(verts.begin(), verts.end(), 0);
    // K5: every 5-set of degree >= 4 vertices.
    std::vector<int> deg4;
    for (int v : verts) {
      if (g_.degree(v) >= 4) deg4.push_back(v);
    }
    bool hit = false;
    choose(deg4, 5, [&](const std::vector<int>& b) {
      std::vector<std::pair<int, int>> pattern;
      for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = i + 1; j < 5; ++j) pattern.emplace_back(b[i], b[j]);
      }
      hit = hit || embed(b, pattern);
    });
    if (hit) return true;
    std::vector<int> deg3;
    for (int v : verts) {
      if (g_.degree(v) >= 3) deg3.push_back(v);
    }
    choose(deg3, 6, [&](const std::vector<int>& six) {
      // The side holding six[0] plus two of the other five.
      for (int x = 1; x < 6 && !hit; ++x) {
        for (int y = x + 1; y < 6 && !hit; ++y) {
          std::vector<int> left{six[0], six[static_cast<std::size_t>(x)], six[static_cast<std::size_t>(y)]};
          std::vector<int> right;
          for (int z = 1; z < 6; ++z) {
            if (z != x && z != y) right.push_back(six[static_cast<std::size_t>(z)]);
          }
          std::vector<std::pair<int, int>> pattern;
          for (int a : left) {
            for (int b : right) pattern.emplace_back(a, b);
          }
          hit = hit || embed(six, pattern);
        }
      }
    });
    return hit;
  }

 private:
  template <typename F>
  void choose(const std::vector<int>& from, std::size_t k, F&& visit) {
    if (from.size() < k) return;
    std::vector<int> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
      if (pick.size() == k) {
        visit(pick);
        return;
      }
      for (std::size_t i = start; i < from.size(); ++i) {
        pick.push_back(from[i]);
        rec(i + 1);
        pick.pop_back();
      }
    };
    rec(0);
  }

  bool embed(const std::vector<int>& branch, const std::vector<std::pair<int, int>>& pattern) {
    std::fill(used_.begin(), used_.end(), 0);
    for (int b : branch) used_[static_cast<std::size_t>(b)] = 1;
    return route(pattern, 0);
  }

  // Connects pattern[k..] by internally disjoint paths through unused vertices.
  bool route(const std::vector<std::pair<int, int>>& pattern, std::size_t k) {
    if (k == pattern.size()) return true;
    const auto [a, b] = pattern[k];
    return extend(pattern, k, a, b);
  }

  bool extend(const std::vector<std::pair<int, int>>& pattern, std::size_t k, int at, int goal) {
    for (int w : g_.neighbors(at)) {
      if (w == goal) {
        if (route(pattern, k + 1)) return true;
        continue;
      }
      if (used_[static_cast<std::size_t>(w)]) continue;
      used_[static_cast<std::size_t>(w)] = 1;
      const bool ok = extend(pattern, k, w, goal);
      used_[static_cast<std::size_t>(w)] = 0;
      if (ok) return true;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  std::vector<char> used_;
};

}  // namespace

bool has_kuratowski_subdivision(const Graph& g) {
  if (g.order() > 10) throw InvalidInput("Kuratowski search limited to 10 vertices");
  return SubdivisionSearch(g).found();
}

int weak_diameter(const Graph& g, const VertexSet& s) {
  const auto n = g.order();
  constexpr int kInf = INT_MAX / 4;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (int j : g.neighbors(static_cast<int>(i))) d[i][static_cast<std::size_t>(j)] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  int worst = 0;
  for (Label a : s) {
    for (Label b : s) {
      const int v = d[static_cast<std::size_t>(g.index_of(a))][static_cast<std::size_t>(g.index_of(b))];
      if (v >= kInf) return -1;
      worst = std::max(worst, v);
    }
  }
  return worst;
}

std::vector<Graph> connected_graphs(int n) {
  std::vector<Edge> slots;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  }
  std::vector<Label> labels(static_cast<std::size_t>(n));
  std::iota(labels.begin(), labels.end(), Label{0});
  std::vector<Graph> out;
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<Edge> edges;
    for (std::size_t e = 0; e < slots.size(); ++e) {
      if (mask >> e & 1u) edges.push_back(slots[e]);
    }
    Graph g = Graph::from_edges(labels, edges);
    if (components(g).size() == 1) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace ldl::brute
