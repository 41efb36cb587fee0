#include "ldl/colorings.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "ldl/error.hpp"
#include "ldl/generators.hpp"

namespace ldl {

namespace {

std::vector<VertexSet> to_classes(const std::vector<std::vector<Label>>& buckets) {
  std::vector<VertexSet> out;
  for (const auto& b : buckets) {
    if (!b.empty()) out.emplace_back(b);
  }
  return out;
}

std::vector<Label> path_order(const Graph& g) {
  const auto n = g.order();
  if (n == 0) throw InvalidInput("path coloring needs a non-empty path");
  if (n == 1) return {g.label(0)};
  if (g.edge_count() != n - 1) throw InvalidInput("not a path");
  int start = -1;
  for (int v = 0; v < static_cast<int>(n); ++v) {
    if (g.degree(v) > 2 || g.degree(v) == 0) throw InvalidInput("not a path");
    if (g.degree(v) == 1 && start < 0) start = v;
  }
  if (start < 0) throw InvalidInput("not a path");
  std::vector<Label> order;
  int prev = -1;
  int cur = start;
  while (cur >= 0) {
    order.push_back(g.label(cur));
    int next = -1;
    for (int w : g.neighbors(cur)) {
      if (w != prev) next = w;
    }
    prev = cur;
    cur = next;
  }
  if (order.size() != n) throw InvalidInput("not a path");
  return order;
}

std::vector<VertexSet> blocks(const std::vector<Label>& order, int r) {
  std::vector<std::vector<Label>> buckets(2);
  for (std::size_t i = 0; i < order.size(); ++i) buckets[(i / static_cast<std::size_t>(r)) % 2].push_back(order[i]);
  return to_classes(buckets);
}

}  // namespace

BoundedColoring path_coloring(const Graph& g, int r) {
  if (r < 1) throw InvalidInput("scale r must be >= 1");
  return {blocks(path_order(g), r), r, r - 1};
}

BoundedColoring grid_coloring(const Graph& g, int rows, int cols, int r) {
  if (r < 1) throw InvalidInput("scale r must be >= 1");
  if (rows < 1 || cols < 1 || !(g == grid(rows, cols))) throw InvalidInput("not the canonical grid");
  if (rows == 1 || cols == 1) return {blocks(path_order(g), r), r, 2 * (r - 1)};

  const int width = std::max(1, 2 * r - 2);
  const int height = r;
  const int shift = std::max(1, 3 * r - 3);
  std::vector<std::vector<Label>> buckets(3);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const int colour = ((j + (i / height) * shift) / width) % 3;
      buckets[static_cast<std::size_t>(colour)].push_back(static_cast<Label>(i * cols + j));
    }
  }
  return {to_classes(buckets), r, 2 * (r - 1)};
}

int max_class_diameter(const Graph& g, const std::vector<VertexSet>& classes, int r) {
  int worst = 0;
  for (const auto& cls : classes) {
    for (const auto& comp : khop_components(g, cls, r)) worst = std::max(worst, weak_diameter(g, comp));
  }
  return worst;
}

bool verify_bounded(const Graph& g, const BoundedColoring& col) {
  if (col.r < 1) throw InvalidInput("scale r must be >= 1");
  VertexSet seen;
  std::size_t total = 0;
  for (const auto& cls : col.classes) {
    for (Label v : cls) g.index_of(v);
    seen = seen.unite(cls);
    total += cls.size();
  }
  if (total != g.order() || seen.size() != g.order()) throw InvalidInput("classes do not partition the vertex set");
  for (const auto& cls : col.classes) {
    for (const auto& comp : khop_components(g, cls, col.r)) {
      if (weak_diameter(g, comp) > col.bound) return false;
    }
  }
  return true;
}

std::vector<VertexSet> read_classes(std::istream& in) {
  std::vector<VertexSet> out;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream words(line);
    std::vector<Label> members;
    Label v = 0;
    while (words >> v) members.push_back(v);
    if (!words.eof()) throw InvalidInput("bad coloring line: " + line);
    out.emplace_back(std::move(members));
  }
  return out;
}

void write_classes(std::ostream& out, const std::vector<VertexSet>& classes) {
  for (const auto& cls : classes) {
    bool first = true;
    for (Label v : cls) {
      out << (first ? "" : " ") << v;
      first = false;
    }
    out << '\n';
  }
}

}  // namespace ldl
