#pragma once

#include <iosfwd>
#include <string>

#include "phcavd/graph.hpp"

namespace phcavd {

// Edge-list text format: first line "n m", then m lines "u v" with 0-based
// ids. Blank lines and lines starting with '#' are ignored.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list_file(const Graph& g, const std::string& path);

}  // namespace phcavd
