#pragma once

#include <iosfwd>
#include <string>

#include "ldl/graph.hpp"

namespace ldl {

// Edge-list text format:
//
//   c optional comment lines
//   p <n> <m>
//   v <label>        (n lines)
//   e <label> <label> (m lines)
//
// Writing always emits the header, then vertices, then edges, each sorted.
// Reading accepts the records in any order after the header.

Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

Graph load_edge_list(const std::string& path);
void save_edge_list(const std::string& path, const Graph& g);

}  // namespace ldl
