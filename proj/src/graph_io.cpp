#include "ldl/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "ldl/error.hpp"

namespace ldl {

namespace {

Label parse_label(std::istringstream& fields, int line_no) {
  long long value = -1;
  if (!(fields >> value) || value < 0) {
    throw InvalidInput("line " + std::to_string(line_no) + ": expected a non-negative label");
  }
  return static_cast<Label>(value);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  long long declared_n = 0;
  long long declared_m = 0;
  std::vector<Label> labels;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag) || tag[0] == 'c') continue;
    if (tag == "p") {
      if (have_header) throw InvalidInput("line " + std::to_string(line_no) + ": second header");
      if (!(fields >> declared_n >> declared_m) || declared_n < 0 || declared_m < 0) {
        throw InvalidInput("line " + std::to_string(line_no) + ": malformed header");
      }
      have_header = true;
    } else if (!have_header) {
      throw InvalidInput("line " + std::to_string(line_no) + ": record before 'p' header");
    } else if (tag == "v") {
      labels.push_back(parse_label(fields, line_no));
    } else if (tag == "e") {
      const Label a = parse_label(fields, line_no);
      const Label b = parse_label(fields, line_no);
      edges.emplace_back(a, b);
    } else {
      throw InvalidInput("line " + std::to_string(line_no) + ": unknown record '" + tag + "'");
    }
  }
  if (!have_header) throw InvalidInput("missing 'p' header");
  Graph g = Graph::from_edges(std::move(labels), edges);
  if (static_cast<long long>(g.order()) != declared_n || static_cast<long long>(g.edge_count()) != declared_m) {
    throw InvalidInput("header counts do not match the records");
  }
  return g;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "p " << g.order() << ' ' << g.edge_count() << '\n';
  for (Label v : g.labels()) out << "v " << v << '\n';
  for (const auto& [a, b] : g.edges()) out << "e " << a << ' ' << b << '\n';
}

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  return read_edge_list(in);
}

void save_edge_list(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  write_edge_list(out, g);
}

}  // namespace ldl
