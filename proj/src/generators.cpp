#include "ldl/generators.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ldl/error.hpp"
#include "ldl/graph_io.hpp"
#include "ldl/planarity.hpp"

namespace ldl {

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

std::vector<Label> iota_labels(int n) {
  std::vector<Label> labels(static_cast<std::size_t>(n));
  std::iota(labels.begin(), labels.end(), Label{0});
  return labels;
}

void require(bool ok, const char* what) {
  if (!ok) throw InvalidInput(what);
}

Label cell(int cols, int i, int j) { return static_cast<Label>(i * cols + j); }

}  // namespace

Graph path(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(iota_labels(n), edges);
}

Graph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(iota_labels(n), edges);
}

Graph complete(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph::from_edges(iota_labels(n), edges);
}

Graph complete_bipartite(int a, int b) {
  require(a >= 1 && b >= 1, "complete bipartite graph needs both parts non-empty");
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  }
  return Graph::from_edges(iota_labels(a + b), edges);
}

Graph star(int leaves) {
  require(leaves >= 1, "star needs at least one leaf");
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph::from_edges(iota_labels(leaves + 1), edges);
}

Graph grid(int rows, int cols) {
  require(rows >= 1 && cols >= 1, "grid needs positive dimensions");
  std::vector<Edge> edges;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (j + 1 < cols) edges.emplace_back(cell(cols, i, j), cell(cols, i, j + 1));
      if (i + 1 < rows) edges.emplace_back(cell(cols, i, j), cell(cols, i + 1, j));
    }
  }
  return Graph::from_edges(iota_labels(rows * cols), edges);
}

Graph torus_grid(int rows, int cols) {
  require(rows >= 3 && cols >= 3, "torus grid needs both dimensions >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      edges.emplace_back(cell(cols, i, j), cell(cols, i, (j + 1) % cols));
      edges.emplace_back(cell(cols, i, j), cell(cols, (i + 1) % rows, j));
    }
  }
  return Graph::from_edges(iota_labels(rows * cols), edges);
}

Graph tree_T_alpha(int alpha) {
  require(alpha >= 1, "T_alpha needs alpha >= 1");
  const int mid = alpha + 1;
  const int fan = alpha * alpha + 1;
  std::vector<Edge> edges;
  int next = mid + 1;
  for (int i = 1; i <= mid; ++i) {
    edges.emplace_back(0, i);
    for (int t = 0; t < fan; ++t) edges.emplace_back(i, next++);
  }
  return Graph::from_edges(iota_labels(next), edges);
}

VertexSet tree_T_alpha_depth1(int alpha) {
  std::vector<Label> out;
  for (int i = 1; i <= alpha + 1; ++i) out.push_back(static_cast<Label>(i));
  return VertexSet::from_sorted(std::move(out));
}

Graph projective_circulant(int genus) {
  require(genus >= 1, "projective circulant needs g >= 1");
  const int n = 2 * genus + 6;
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  for (int i = 0; i < n / 2; ++i) edges.emplace_back(i, i + n / 2);
  return Graph::from_edges(iota_labels(n), edges);
}

Graph random_planar(int n, std::uint64_t seed) {
  require(n >= 1, "random_planar needs n >= 1");
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  if (n < 3) return Graph::from_edges(iota_labels(n), edges);
  const auto labels = iota_labels(n);
  for (int attempt = 0; attempt < 2 * n; ++attempt) {
    const int span = 2 + static_cast<int>(rng.below(3));
    const int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    const int b = a + span;
    if (b >= n) continue;
    const Edge e{static_cast<Label>(a), static_cast<Label>(b)};
    if (std::find(edges.begin(), edges.end(), e) != edges.end()) continue;
    edges.push_back(e);
    if (!is_planar(Graph::from_edges(labels, edges))) edges.pop_back();
  }
  return Graph::from_edges(labels, edges);
}

Graph random_graph(int n, int p_milli, std::uint64_t seed) {
  require(n >= 1, "random_graph needs n >= 1");
  require(p_milli >= 0 && p_milli <= 1000, "random_graph probability must be in 0..1000 milli");
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) {
      if (static_cast<int>(rng.below(1000)) < p_milli) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(iota_labels(n), edges);
}

Graph random_tree(int n, std::uint64_t seed) {
  require(n >= 1, "random_tree needs n >= 1");
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(rng.below(static_cast<std::uint64_t>(i)), i);
  return Graph::from_edges(iota_labels(n), edges);
}

namespace {

std::vector<long long> parse_args(const std::string& text) {
  std::vector<long long> out;
  if (text.empty()) return out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw InvalidInput("bad generator argument '" + item + "'");
    } catch (const std::logic_error&) {
      throw InvalidInput("bad generator argument '" + item + "'");
    }
  }
  return out;
}

Graph shifted(const Graph& g, Label offset) {
  std::map<Label, Label> mapping;
  for (Label v : g.labels()) mapping.emplace(v, v + offset);
  return relabel(g, mapping);
}

}  // namespace

Graph generate(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::string rest = colon == std::string::npos ? std::string() : spec.substr(colon + 1);

  if (name == "file") return load_edge_list(rest);
  if (name == "disjoint") {
    Graph acc;
    std::istringstream in(rest);
    std::string part;
    bool first = true;
    while (std::getline(in, part, ';')) {
      Graph g = generate(part);
      if (first) {
        acc = std::move(g);
        first = false;
      } else {
        const Label offset = acc.order() == 0 ? 0 : acc.labels().back() + 1;
        acc = disjoint_union(acc, shifted(g, offset));
      }
    }
    if (first) throw InvalidInput("empty disjoint spec");
    return acc;
  }

  const auto args = parse_args(rest);
  auto arity = [&](std::size_t k) {
    if (args.size() != k) throw InvalidInput("generator '" + name + "' expects " + std::to_string(k) + " arguments");
  };
  auto i32 = [&](std::size_t k) { return static_cast<int>(args[k]); };
  if (name == "path") return arity(1), path(i32(0));
  if (name == "cycle") return arity(1), cycle(i32(0));
  if (name == "complete") return arity(1), complete(i32(0));
  if (name == "complete_bipartite") return arity(2), complete_bipartite(i32(0), i32(1));
  if (name == "star") return arity(1), star(i32(0));
  if (name == "grid") return arity(2), grid(i32(0), i32(1));
  if (name == "torus_grid") return arity(2), torus_grid(i32(0), i32(1));
  if (name == "tree_T_alpha") return arity(1), tree_T_alpha(i32(0));
  if (name == "projective_circulant") return arity(1), projective_circulant(i32(0));
  if (name == "random_planar") return arity(2), random_planar(i32(0), static_cast<std::uint64_t>(args[1]));
  if (name == "random_tree") return arity(2), random_tree(i32(0), static_cast<std::uint64_t>(args[1]));
  if (name == "random_graph") {
    arity(3);
    return random_graph(i32(0), i32(1), static_cast<std::uint64_t>(args[2]));
  }
  throw InvalidInput("unknown generator '" + name + "'");
}

}  // namespace ldl
