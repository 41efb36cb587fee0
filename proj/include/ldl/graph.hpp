#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace ldl {

/// Vertex identifier. Labels only need a total order; they are not required
/// to be contiguous.
using Label = std::uint64_t;
using Edge = std::pair<Label, Label>;

/// Sorted set of vertex labels.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Label> items);
  explicit VertexSet(std::vector<Label> items);

  /// Wraps a vector that is already sorted and duplicate-free.
  static VertexSet from_sorted(std::vector<Label> items);

  bool contains(Label v) const;
  void insert(Label v);
  bool empty() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }

  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  Label front() const { return items_.front(); }
  Label back() const { return items_.back(); }
  const std::vector<Label>& items() const { return items_; }

  VertexSet unite(const VertexSet& other) const;
  VertexSet intersect(const VertexSet& other) const;
  VertexSet minus(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;

  /// Element-wise lexicographic comparison of the sorted label sequences.
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Label> items_;
};

std::ostream& operator<<(std::ostream& os, const VertexSet& s);

/// Immutable simple undirected graph on labelled vertices.
///
/// Vertices are stored by index in ascending label order, so index order and
/// label order coincide and every adjacency list is sorted both ways.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from its labels and edges. Duplicate edges are merged;
  /// self-loops, unknown endpoints and repeated labels are rejected.
  static Graph from_edges(std::vector<Label> labels, std::span<const Edge> edges);
  static Graph from_edges(std::vector<Label> labels, std::initializer_list<Edge> edges);

  std::size_t order() const { return labels_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const Label> labels() const { return labels_; }
  Label label(int index) const { return labels_[static_cast<std::size_t>(index)]; }
  bool has_vertex(Label v) const;
  /// Index of a label; throws NoSuchVertex when absent.
  int index_of(Label v) const;
  /// Index of a label or -1.
  int find(Label v) const;

  std::span<const int> neighbors(int index) const { return adjacency_[static_cast<std::size_t>(index)]; }
  std::size_t degree(int index) const { return adjacency_[static_cast<std::size_t>(index)].size(); }
  bool has_edge(Label a, Label b) const;

  VertexSet vertex_set() const;
  /// Edges as (smaller, larger) label pairs in ascending order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<Label> labels_;
  std::vector<std::vector<int>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Host-graph distances; -1 marks unreachable vertices. Indexed like `g`.
std::vector<int> bfs_indices(const Graph& g, std::span<const int> sources, int max_radius = -1);

VertexSet ball(const Graph& g, Label u, int r);
/// N^r[S]: every vertex within distance r of some member of `s`.
VertexSet ball(const Graph& g, const VertexSet& s, int r);
Graph induced(const Graph& g, const VertexSet& s);
Graph power(const Graph& g, int r);
/// Classes of `x` chained by steps of host distance at most k, ordered by
/// smallest member.
std::vector<VertexSet> khop_components(const Graph& g, const VertexSet& x, int k);
int weak_diameter(const Graph& g, const VertexSet& s);
std::vector<VertexSet> components(const Graph& g);
std::map<Label, int> distances_from(const Graph& g, Label u);
/// Distance between two labels, or -1 when disconnected.
int distance(const Graph& g, Label a, Label b);
/// Eccentricity of `u` within its own component.
int eccentricity(const Graph& g, Label u);

/// Disjoint union; throws when the label sets intersect.
Graph disjoint_union(const Graph& a, const Graph& b);
/// Applies an injective relabelling given as a total map on labels(g).
Graph relabel(const Graph& g, const std::map<Label, Label>& mapping);
VertexSet relabel(const VertexSet& s, const std::map<Label, Label>& mapping);

}  // namespace ldl
