#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "dgr/digraph.hpp"

namespace dgr {

// Edge-list text: the first non-comment line is the order n, every further
// non-empty line is "u v" (0-indexed). Lines starting with '#' are comments.
// For graphs "u v" is an undirected edge.
Digraph read_digraph(std::istream& in);
Digraph parse_digraph(std::string_view text);
Digraph load_digraph(const std::string& path);
Graph read_graph(std::istream& in);
Graph parse_graph(std::string_view text);

// Writes the order line, then each comment line prefixed with "# ", then one
// arc per line in sorted order.
void write_edge_list(std::ostream& out, const Digraph& d, const std::vector<std::string>& comments = {});
void write_edge_list(std::ostream& out, const Graph& g, const std::vector<std::string>& comments = {});
std::string to_edge_list(const Digraph& d);

// Graphviz. Bidirected pairs appear as two arcs.
void write_dot(std::ostream& out, const Digraph& d, std::string_view name = "D");
void write_dot(std::ostream& out, const Graph& g, std::string_view name = "G");

}  // namespace dgr
