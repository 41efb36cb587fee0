#include "ldl/planarity.hpp"

#include <algorithm>
#include <map>

#include "ldl/error.hpp"

namespace ldl {

namespace {

constexpr int kNone = -1;

struct Interval {
  int low = kNone;
  int high = kNone;
  bool empty() const { return low == kNone && high == kNone; }
};

struct ConflictPair {
  Interval left;
  Interval right;
  int id = kNone;
  void swap() { std::swap(left, right); }
};

// Edges are oriented by the first DFS; an oriented edge keeps the id of its
// undirected edge. Heights, lowpoints and nesting depths follow Brandes,
// "The Left-Right Planarity Test" (2009).
class LrTester {
 public:
  explicit LrTester(const Graph& g) : g_(g), n_(static_cast<int>(g.order())) {
    slot_edge_.resize(g.order());
    std::size_t m = 0;
    for (int v = 0; v < n_; ++v) {
      for (int w : g.neighbors(v)) {
        if (w > v) {
          slot_edge_[static_cast<std::size_t>(v)].push_back(static_cast<int>(m));
          ++m;
        } else {
          slot_edge_[static_cast<std::size_t>(v)].push_back(kNone);
        }
      }
    }
    // Fill the back-references (v > w) from the forward slots.
    std::map<std::pair<int, int>, int> id_of;
    for (int v = 0; v < n_; ++v) {
      const auto nbrs = g.neighbors(v);
      for (std::size_t k = 0; k < nbrs.size(); ++k) {
        if (nbrs[k] > v) id_of.emplace(std::pair{v, nbrs[k]}, slot_edge_[static_cast<std::size_t>(v)][k]);
      }
    }
    for (int v = 0; v < n_; ++v) {
      const auto nbrs = g.neighbors(v);
      for (std::size_t k = 0; k < nbrs.size(); ++k) {
        if (nbrs[k] < v) slot_edge_[static_cast<std::size_t>(v)][k] = id_of.at({nbrs[k], v});
      }
    }
    src_.assign(m, kNone);
    dst_.assign(m, kNone);
    lowpt_.assign(m, 0);
    lowpt2_.assign(m, 0);
    nesting_.assign(m, 0);
    ref_.assign(m, kNone);
    lowpt_edge_.assign(m, kNone);
    stack_bottom_.assign(m, kNone);
    height_.assign(g.order(), kNone);
    parent_edge_.assign(g.order(), kNone);
    out_.assign(g.order(), {});
  }

  bool planar() {
    std::vector<int> roots;
    for (int v = 0; v < n_; ++v) {
      if (height_[static_cast<std::size_t>(v)] == kNone) {
        height_[static_cast<std::size_t>(v)] = 0;
        roots.push_back(v);
        orient(v);
      }
    }
    for (auto& edges : out_) {
      std::stable_sort(edges.begin(), edges.end(), [&](int a, int b) {
        return nesting_[static_cast<std::size_t>(a)] < nesting_[static_cast<std::size_t>(b)];
      });
    }
    for (int root : roots) {
      stack_.clear();
      if (!test(root)) return false;
    }
    return true;
  }

 private:
  int& at(std::vector<int>& v, int i) { return v[static_cast<std::size_t>(i)]; }
  int top_id() const { return stack_.empty() ? kNone : stack_.back().id; }

  void orient(int v) {
    const int e = at(parent_edge_, v);
    const auto nbrs = g_.neighbors(v);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      const int w = nbrs[k];
      const int vw = slot_edge_[static_cast<std::size_t>(v)][k];
      if (at(src_, vw) != kNone) continue;
      at(src_, vw) = v;
      at(dst_, vw) = w;
      out_[static_cast<std::size_t>(v)].push_back(vw);
      at(lowpt_, vw) = at(height_, v);
      at(lowpt2_, vw) = at(height_, v);
      if (at(height_, w) == kNone) {
        at(parent_edge_, w) = vw;
        at(height_, w) = at(height_, v) + 1;
        orient(w);
      } else {
        at(lowpt_, vw) = at(height_, w);
      }
      at(nesting_, vw) = 2 * at(lowpt_, vw) + (at(lowpt2_, vw) < at(height_, v) ? 1 : 0);
      if (e != kNone) {
        if (at(lowpt_, vw) < at(lowpt_, e)) {
          at(lowpt2_, e) = std::min(at(lowpt_, e), at(lowpt2_, vw));
          at(lowpt_, e) = at(lowpt_, vw);
        } else if (at(lowpt_, vw) > at(lowpt_, e)) {
          at(lowpt2_, e) = std::min(at(lowpt2_, e), at(lowpt_, vw));
        } else {
          at(lowpt2_, e) = std::min(at(lowpt2_, e), at(lowpt2_, vw));
        }
      }
    }
  }

  bool conflicting(const Interval& i, int edge) {
    return !i.empty() && at(lowpt_, i.high) > at(lowpt_, edge);
  }

  int lowest(const ConflictPair& p) {
    if (p.left.empty()) return at(lowpt_, p.right.low);
    if (p.right.empty()) return at(lowpt_, p.left.low);
    return std::min(at(lowpt_, p.left.low), at(lowpt_, p.right.low));
  }

  void set_ref(int edge, int value) {
    if (edge != kNone) at(ref_, edge) = value;
  }

  bool test(int v) {
    const int e = at(parent_edge_, v);
    const auto& edges = out_[static_cast<std::size_t>(v)];
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const int ei = edges[i];
      const int w = at(dst_, ei);
      at(stack_bottom_, ei) = top_id();
      if (ei == at(parent_edge_, w)) {
        if (!test(w)) return false;
      } else {
        at(lowpt_edge_, ei) = ei;
        ConflictPair p;
        p.right = Interval{ei, ei};
        p.id = next_id_++;
        stack_.push_back(p);
      }
      if (at(lowpt_, ei) < at(height_, v)) {
        if (i == 0) {
          at(lowpt_edge_, e) = at(lowpt_edge_, ei);
        } else if (!add_constraints(ei, e)) {
          return false;
        }
      }
    }
    if (e != kNone) remove_back_edges(e);
    return true;
  }

  bool add_constraints(int ei, int e) {
    ConflictPair p;
    // Merge the return edges of ei into p.right.
    do {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (!q.left.empty()) q.swap();
      if (!q.left.empty()) return false;
      if (at(lowpt_, q.right.low) > at(lowpt_, e)) {
        if (p.right.empty()) {
          p.right = q.right;
        } else {
          set_ref(p.right.low, q.right.high);
        }
        p.right.low = q.right.low;
      } else {
        set_ref(q.right.low, at(lowpt_edge_, e));
      }
    } while (top_id() != at(stack_bottom_, ei));

    // Merge conflicting return edges of earlier siblings into p.left.
    while (!stack_.empty() && (conflicting(stack_.back().left, ei) || conflicting(stack_.back().right, ei))) {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (conflicting(q.right, ei)) q.swap();
      if (conflicting(q.right, ei)) return false;
      set_ref(p.right.low, q.right.high);
      if (q.right.low != kNone) p.right.low = q.right.low;
      if (p.left.empty()) {
        p.left = q.left;
      } else {
        set_ref(p.left.low, q.left.high);
      }
      p.left.low = q.left.low;
    }
    if (!(p.left.empty() && p.right.empty())) {
      p.id = next_id_++;
      stack_.push_back(p);
    }
    return true;
  }

  void remove_back_edges(int e) {
    const int u = at(src_, e);
    while (!stack_.empty() && lowest(stack_.back()) == at(height_, u)) stack_.pop_back();
    if (!stack_.empty()) {
      ConflictPair p = stack_.back();
      stack_.pop_back();
      while (p.left.high != kNone && at(dst_, p.left.high) == u) p.left.high = at(ref_, p.left.high);
      if (p.left.high == kNone && p.left.low != kNone) {
        set_ref(p.left.low, p.right.low);
        p.left.low = kNone;
      }
      while (p.right.high != kNone && at(dst_, p.right.high) == u) p.right.high = at(ref_, p.right.high);
      if (p.right.high == kNone && p.right.low != kNone) {
        set_ref(p.right.low, p.left.low);
        p.right.low = kNone;
      }
      stack_.push_back(p);
    }
    if (at(lowpt_, e) < at(height_, u) && !stack_.empty()) {
      const int hl = stack_.back().left.high;
      const int hr = stack_.back().right.high;
      if (hl != kNone && (hr == kNone || at(lowpt_, hl) > at(lowpt_, hr))) {
        at(ref_, e) = hl;
      } else {
        at(ref_, e) = hr;
      }
    }
  }

  const Graph& g_;
  int n_;
  std::vector<std::vector<int>> slot_edge_;
  std::vector<int> src_, dst_, lowpt_, lowpt2_, nesting_, ref_, lowpt_edge_, stack_bottom_;
  std::vector<int> height_, parent_edge_;
  std::vector<std::vector<int>> out_;
  std::vector<ConflictPair> stack_;
  int next_id_ = 0;
};

}  // namespace

bool is_planar(const Graph& g) {
  const auto n = g.order();
  if (n >= 3 && g.edge_count() > 3 * n - 6) return false;
  if (n <= 4) return true;
  return LrTester(g).planar();
}

ClassPredicate planar_class() { return ClassPredicate{"planar", [](const Graph& g) { return is_planar(g); }, true}; }

VertexSet error_set(const Graph& g, int t, const ClassPredicate& c) {
  if (t < 0) throw InvalidInput("error set radius must be >= 0");
  std::vector<Label> out;
  for (Label u : g.labels()) {
    if (!c.test(induced(g, ball(g, u, t)))) out.push_back(u);
  }
  return VertexSet::from_sorted(std::move(out));
}

int niceness_bound_check(const Graph& g, int t, const ClassPredicate& c, int rho) {
  if (rho < 0) throw InvalidInput("rho must be >= 0");
  const VertexSet x = error_set(g, t, c);
  if (x.empty()) return 0;
  const VertexSet region = ball(g, x, 2 * rho);
  int worst = 0;
  for (const auto& comp : components(induced(g, region))) worst = std::max(worst, weak_diameter(g, comp));
  return worst;
}

int genus_niceness_bound(int genus, int t, int rho) { return genus * (2 * t + 4 * rho + 1); }

}  // namespace ldl
