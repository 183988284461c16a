#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace dgr {

using Vertex = int;

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Unordered pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable simple digraph on vertices 0..order-1. Arcs are kept sorted and
// unique; out/in adjacency is indexed once at construction. For order <= 64
// each vertex also carries a bit row of its out- and in-neighbours, which the
// bit-parallel BFS uses.
class Digraph {
 public:
  static constexpr int kMaxMaskOrder = 64;

  // Validates: order >= 1, no self-loops, endpoints in range. Duplicates are
  // dropped.
  Digraph(int order, std::vector<Arc> arcs);

  // Fast path for enumeration: bit j of rows[i] is the arc (i, j). Diagonal
  // bits must be clear.
  static Digraph from_out_masks(std::span<const std::uint64_t> rows);

  int order() const noexcept { return order_; }
  std::size_t size() const noexcept { return arcs_.size(); }
  std::span<const Arc> arcs() const noexcept { return arcs_; }

  std::span<const Vertex> out_neighbors(Vertex v) const;
  std::span<const Vertex> in_neighbors(Vertex v) const;
  int out_degree(Vertex v) const;
  int in_degree(Vertex v) const;

  bool has_arc(Vertex tail, Vertex head) const;
  bool contains(Vertex v) const noexcept { return v >= 0 && v < order_; }

  bool has_masks() const noexcept { return order_ <= kMaxMaskOrder; }
  std::uint64_t out_mask(Vertex v) const { return out_mask_[v]; }
  std::uint64_t in_mask(Vertex v) const { return in_mask_[v]; }

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.order_ == b.order_ && a.arcs_ == b.arcs_;
  }

 private:
  Digraph() = default;
  void index();

  int order_ = 0;
  std::vector<Arc> arcs_;
  std::vector<int> out_offsets_;
  std::vector<Vertex> out_targets_;
  std::vector<int> in_offsets_;
  std::vector<Vertex> in_sources_;
  std::vector<std::uint64_t> out_mask_;
  std::vector<std::uint64_t> in_mask_;
};

// Immutable simple undirected graph on vertices 0..order-1.
class Graph {
 public:
  Graph(int order, std::vector<Edge> edges);

  int order() const noexcept { return order_; }
  std::size_t size() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const;
  int degree(Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const;
  bool contains(Vertex v) const noexcept { return v >= 0 && v < order_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  int order_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_;
  std::vector<Vertex> adjacency_;
};

Digraph build_digraph(int order, std::span<const Arc> arcs);
Graph build_graph(int order, std::span<const Edge> edges);

// Each edge becomes two opposite arcs.
Digraph bidirect(const Graph& g);
// uv is an edge iff (u,v) or (v,u) is an arc.
Graph underlying_graph(const Digraph& d);
// All arcs (u,v), u != v, that are absent from d.
Digraph complement(const Digraph& d);
// d + alpha. Throws InvalidInput if alpha is already present or a loop.
Digraph with_arc(const Digraph& d, Arc alpha);
// Vertex v of d becomes perm[v].
Digraph relabel(const Digraph& d, std::span<const Vertex> perm);

// Convenience families used throughout tests and the CLI.
Digraph directed_cycle(int n);
Digraph directed_path(int n);
Digraph complete_digraph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

}  // namespace dgr
