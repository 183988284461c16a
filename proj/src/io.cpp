#include "dgr/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "dgr/errors.hpp"

namespace dgr {

namespace {

struct RawEdgeList {
  int order = 0;
  std::vector<std::pair<int, int>> pairs;
};

bool blank_or_comment(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

RawEdgeList read_raw(std::istream& in) {
  RawEdgeList raw;
  bool have_order = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank_or_comment(line)) continue;
    std::istringstream fields(line);
    auto fail = [&](const std::string& what) {
      return InvalidInput("line " + std::to_string(line_no) + ": " + what + ": '" + line + "'");
    };
    if (!have_order) {
      if (!(fields >> raw.order)) throw fail("expected the vertex count");
      if (raw.order < 1) throw fail("vertex count must be positive");
      have_order = true;
    } else {
      int u = 0;
      int v = 0;
      if (!(fields >> u >> v)) throw fail("expected 'u v'");
      raw.pairs.emplace_back(u, v);
    }
    std::string rest;
    if (fields >> rest && rest.front() != '#') throw fail("trailing tokens");
  }
  if (!have_order) throw InvalidInput("empty edge list: missing vertex count");
  return raw;
}

}  // namespace

Digraph read_digraph(std::istream& in) {
  auto raw = read_raw(in);
  std::vector<Arc> arcs;
  arcs.reserve(raw.pairs.size());
  for (auto [u, v] : raw.pairs) arcs.push_back({u, v});
  return Digraph(raw.order, std::move(arcs));
}

Digraph parse_digraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_digraph(in);
}

Digraph load_digraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  return read_digraph(in);
}

Graph read_graph(std::istream& in) {
  auto raw = read_raw(in);
  std::vector<Edge> edges;
  edges.reserve(raw.pairs.size());
  for (auto [u, v] : raw.pairs) edges.push_back({u, v});
  return Graph(raw.order, std::move(edges));
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_graph(in);
}

void write_edge_list(std::ostream& out, const Digraph& d, const std::vector<std::string>& comments) {
  out << d.order() << '\n';
  for (const auto& c : comments) out << "# " << c << '\n';
  for (const Arc& a : d.arcs()) out << a.tail << ' ' << a.head << '\n';
}

void write_edge_list(std::ostream& out, const Graph& g, const std::vector<std::string>& comments) {
  out << g.order() << '\n';
  for (const auto& c : comments) out << "# " << c << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string to_edge_list(const Digraph& d) {
  std::ostringstream out;
  write_edge_list(out, d);
  return out.str();
}

void write_dot(std::ostream& out, const Digraph& d, std::string_view name) {
  out << "digraph " << name << " {\n";
  for (Vertex v = 0; v < d.order(); ++v) out << "  " << v << ";\n";
  for (const Arc& a : d.arcs()) out << "  " << a.tail << " -> " << a.head << ";\n";
  out << "}\n";
}

void write_dot(std::ostream& out, const Graph& g, std::string_view name) {
  out << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
}

}  // namespace dgr
