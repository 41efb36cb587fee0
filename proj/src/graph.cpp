#include "ldl/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <ostream>
#include <string>

#include "ldl/error.hpp"

namespace ldl {

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(std::initializer_list<Label> items) : VertexSet(std::vector<Label>(items)) {}

VertexSet::VertexSet(std::vector<Label> items) : items_(std::move(items)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

VertexSet VertexSet::from_sorted(std::vector<Label> items) {
  VertexSet s;
  s.items_ = std::move(items);
  return s;
}

bool VertexSet::contains(Label v) const { return std::binary_search(items_.begin(), items_.end(), v); }

void VertexSet::insert(Label v) {
  auto it = std::lower_bound(items_.begin(), items_.end(), v);
  if (it == items_.end() || *it != v) items_.insert(it, v);
}

VertexSet VertexSet::unite(const VertexSet& other) const {
  std::vector<Label> out;
  out.reserve(items_.size() + other.items_.size());
  std::set_union(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(), std::back_inserter(out));
  return from_sorted(std::move(out));
}

VertexSet VertexSet::intersect(const VertexSet& other) const {
  std::vector<Label> out;
  std::set_intersection(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                        std::back_inserter(out));
  return from_sorted(std::move(out));
}

VertexSet VertexSet::minus(const VertexSet& other) const {
  std::vector<Label> out;
  std::set_difference(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                      std::back_inserter(out));
  return from_sorted(std::move(out));
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
}

std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
  os << '{';
  bool first = true;
  for (Label v : s) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  return os << '}';
}

// -------------------------------------------------------------------- Graph

Graph Graph::from_edges(std::vector<Label> labels, std::initializer_list<Edge> edges) {
  return from_edges(std::move(labels), std::span<const Edge>(edges.begin(), edges.size()));
}

Graph Graph::from_edges(std::vector<Label> labels, std::span<const Edge> edges) {
  Graph g;
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
    throw InvalidInput("duplicate vertex label");
  }
  g.labels_ = std::move(labels);
  g.adjacency_.assign(g.labels_.size(), {});
  for (const auto& [a, b] : edges) {
    if (a == b) throw InvalidInput("self-loop on vertex " + std::to_string(a));
    const int ia = g.find(a);
    const int ib = g.find(b);
    if (ia < 0) throw NoSuchVertex(std::to_string(a));
    if (ib < 0) throw NoSuchVertex(std::to_string(b));
    g.adjacency_[static_cast<std::size_t>(ia)].push_back(ib);
    g.adjacency_[static_cast<std::size_t>(ib)].push_back(ia);
  }
  for (auto& adj : g.adjacency_) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    g.edge_count_ += adj.size();
  }
  g.edge_count_ /= 2;
  return g;
}

int Graph::find(Label v) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
  if (it == labels_.end() || *it != v) return -1;
  return static_cast<int>(it - labels_.begin());
}

bool Graph::has_vertex(Label v) const { return find(v) >= 0; }

int Graph::index_of(Label v) const {
  const int i = find(v);
  if (i < 0) throw NoSuchVertex(std::to_string(v));
  return i;
}

bool Graph::has_edge(Label a, Label b) const {
  const int ia = find(a);
  const int ib = find(b);
  if (ia < 0 || ib < 0) return false;
  const auto& adj = adjacency_[static_cast<std::size_t>(ia)];
  return std::binary_search(adj.begin(), adj.end(), ib);
}

VertexSet Graph::vertex_set() const { return VertexSet::from_sorted(labels_); }

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    for (int j : adjacency_[i]) {
      if (static_cast<std::size_t>(j) > i) out.emplace_back(labels_[i], labels_[static_cast<std::size_t>(j)]);
    }
  }
  return out;
}

// --------------------------------------------------------------- primitives

std::vector<int> bfs_indices(const Graph& g, std::span<const int> sources, int max_radius) {
  std::vector<int> dist(g.order(), -1);
  std::deque<int> queue;
  for (int s : sources) {
    if (dist[static_cast<std::size_t>(s)] != 0) {
      dist[static_cast<std::size_t>(s)] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    const int dv = dist[static_cast<std::size_t>(v)];
    if (max_radius >= 0 && dv >= max_radius) continue;
    for (int w : g.neighbors(v)) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dv + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

namespace {

std::vector<int> indices_of(const Graph& g, const VertexSet& s) {
  std::vector<int> out;
  out.reserve(s.size());
  for (Label v : s) out.push_back(g.index_of(v));
  return out;
}

VertexSet reached(const Graph& g, const std::vector<int>& dist) {
  std::vector<Label> out;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (dist[i] >= 0) out.push_back(g.label(static_cast<int>(i)));
  }
  return VertexSet::from_sorted(std::move(out));
}

void require_radius(int r) {
  if (r < 0) throw InvalidInput("negative radius");
}

}  // namespace

VertexSet ball(const Graph& g, Label u, int r) {
  require_radius(r);
  const int src = g.index_of(u);
  return reached(g, bfs_indices(g, std::span<const int>(&src, 1), r));
}

VertexSet ball(const Graph& g, const VertexSet& s, int r) {
  require_radius(r);
  const auto src = indices_of(g, s);
  return reached(g, bfs_indices(g, src, r));
}

Graph induced(const Graph& g, const VertexSet& s) {
  std::vector<int> remap(g.order(), -1);
  int next = 0;
  for (Label v : s) remap[static_cast<std::size_t>(g.index_of(v))] = next++;
  std::vector<Edge> edges;
  for (Label v : s) {
    const int i = g.index_of(v);
    for (int j : g.neighbors(i)) {
      if (j > i && remap[static_cast<std::size_t>(j)] >= 0) edges.emplace_back(v, g.label(j));
    }
  }
  return Graph::from_edges(s.items(), edges);
}

Graph power(const Graph& g, int r) {
  if (r < 1) throw InvalidInput("graph power needs r >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < static_cast<int>(g.order()); ++i) {
    const auto dist = bfs_indices(g, std::span<const int>(&i, 1), r);
    for (int j = i + 1; j < static_cast<int>(g.order()); ++j) {
      if (dist[static_cast<std::size_t>(j)] > 0) edges.emplace_back(g.label(i), g.label(j));
    }
  }
  return Graph::from_edges(std::vector<Label>(g.labels().begin(), g.labels().end()), edges);
}

std::vector<VertexSet> khop_components(const Graph& g, const VertexSet& x, int k) {
  if (k < 1) throw InvalidInput("k-hop components need k >= 1");
  const auto members = indices_of(g, x);
  std::vector<int> slot(g.order(), -1);
  for (std::size_t i = 0; i < members.size(); ++i) slot[static_cast<std::size_t>(members[i])] = static_cast<int>(i);

  std::vector<int> parent(members.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      a = parent[static_cast<std::size_t>(a)];
    }
    return a;
  };
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto dist = bfs_indices(g, std::span<const int>(&members[i], 1), k);
    for (std::size_t v = 0; v < dist.size(); ++v) {
      if (dist[v] > 0 && slot[v] >= 0) {
        const int a = root(static_cast<int>(i));
        const int b = root(slot[v]);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
  }
  // Members are in label order, so each root is the smallest member of its class.
  std::map<int, std::vector<Label>> classes;
  for (std::size_t i = 0; i < members.size(); ++i) {
    classes[root(static_cast<int>(i))].push_back(g.label(members[i]));
  }
  std::vector<VertexSet> out;
  for (auto& [_, items] : classes) out.push_back(VertexSet::from_sorted(std::move(items)));
  return out;
}

int weak_diameter(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw InvalidInput("weak diameter of an empty set");
  int best = 0;
  for (Label u : s) {
    const int src = g.index_of(u);
    const auto dist = bfs_indices(g, std::span<const int>(&src, 1));
    for (Label v : s) {
      const int d = dist[static_cast<std::size_t>(g.index_of(v))];
      if (d < 0) throw InfiniteDiameter();
      best = std::max(best, d);
    }
  }
  return best;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<char> seen(g.order(), 0);
  for (int i = 0; i < static_cast<int>(g.order()); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    const auto dist = bfs_indices(g, std::span<const int>(&i, 1));
    std::vector<Label> comp;
    for (std::size_t v = 0; v < dist.size(); ++v) {
      if (dist[v] >= 0) {
        seen[v] = 1;
        comp.push_back(g.label(static_cast<int>(v)));
      }
    }
    out.push_back(VertexSet::from_sorted(std::move(comp)));
  }
  return out;
}

std::map<Label, int> distances_from(const Graph& g, Label u) {
  const int src = g.index_of(u);
  const auto dist = bfs_indices(g, std::span<const int>(&src, 1));
  std::map<Label, int> out;
  for (std::size_t v = 0; v < dist.size(); ++v) {
    if (dist[v] >= 0) out.emplace(g.label(static_cast<int>(v)), dist[v]);
  }
  return out;
}

int distance(const Graph& g, Label a, Label b) {
  const int src = g.index_of(a);
  const int dst = g.index_of(b);
  return bfs_indices(g, std::span<const int>(&src, 1))[static_cast<std::size_t>(dst)];
}

int eccentricity(const Graph& g, Label u) {
  const int src = g.index_of(u);
  const auto dist = bfs_indices(g, std::span<const int>(&src, 1));
  return *std::max_element(dist.begin(), dist.end());
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Label> labels(a.labels().begin(), a.labels().end());
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  auto edges = a.edges();
  const auto more = b.edges();
  edges.insert(edges.end(), more.begin(), more.end());
  return Graph::from_edges(std::move(labels), edges);
}

Graph relabel(const Graph& g, const std::map<Label, Label>& mapping) {
  auto image = [&](Label v) {
    auto it = mapping.find(v);
    if (it == mapping.end()) throw InvalidInput("relabelling is not defined on " + std::to_string(v));
    return it->second;
  };
  std::vector<Label> labels;
  for (Label v : g.labels()) labels.push_back(image(v));
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(image(u), image(v));
  return Graph::from_edges(std::move(labels), edges);
}

VertexSet relabel(const VertexSet& s, const std::map<Label, Label>& mapping) {
  std::vector<Label> out;
  for (Label v : s) {
    auto it = mapping.find(v);
    if (it == mapping.end()) throw InvalidInput("relabelling is not defined on " + std::to_string(v));
    out.push_back(it->second);
  }
  return VertexSet(std::move(out));
}

}  // namespace ldl
