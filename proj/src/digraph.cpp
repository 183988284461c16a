#include "dgr/digraph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "dgr/errors.hpp"

namespace dgr {

namespace {

void check_order(int order) {
  if (order < 1) throw InvalidInput("order must be at least 1, got " + std::to_string(order));
}

std::string arc_text(Arc a) {
  return "(" + std::to_string(a.tail) + "," + std::to_string(a.head) + ")";
}

}  // namespace

Digraph::Digraph(int order, std::vector<Arc> arcs) : order_(order), arcs_(std::move(arcs)) {
  check_order(order);
  for (const Arc& a : arcs_) {
    if (a.tail == a.head) throw InvalidInput("self-loop " + arc_text(a));
    if (!contains(a.tail) || !contains(a.head)) {
      throw InvalidInput("arc " + arc_text(a) + " has an endpoint outside 0.." +
                         std::to_string(order - 1));
    }
  }
  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
  index();
}

Digraph Digraph::from_out_masks(std::span<const std::uint64_t> rows) {
  const int n = static_cast<int>(rows.size());
  check_order(n);
  if (n > kMaxMaskOrder) throw InvalidInput("mask construction limited to 64 vertices");
  Digraph d;
  d.order_ = n;
  std::size_t m = 0;
  for (auto r : rows) m += static_cast<std::size_t>(std::popcount(r));
  d.arcs_.reserve(m);
  for (int u = 0; u < n; ++u) {
    if ((rows[u] >> u) & 1U) throw InvalidInput("self-loop at " + std::to_string(u));
    if (n < 64 && (rows[u] >> n) != 0) throw InvalidInput("mask bit beyond order");
    for (auto bits = rows[u]; bits != 0; bits &= bits - 1) {
      d.arcs_.push_back({u, std::countr_zero(bits)});
    }
  }
  d.index();
  return d;
}

void Digraph::index() {
  const auto n = static_cast<std::size_t>(order_);
  out_offsets_.assign(n + 1, 0);
  in_offsets_.assign(n + 1, 0);
  for (const Arc& a : arcs_) {
    ++out_offsets_[a.tail + 1];
    ++in_offsets_[a.head + 1];
  }
  for (std::size_t i = 0; i < n; ++i) {
    out_offsets_[i + 1] += out_offsets_[i];
    in_offsets_[i + 1] += in_offsets_[i];
  }
  // arcs_ is sorted by tail, so out-targets come out grouped and ascending.
  out_targets_.resize(arcs_.size());
  in_sources_.resize(arcs_.size());
  std::vector<int> fill(in_offsets_.begin(), in_offsets_.end() - 1);
  for (std::size_t k = 0; k < arcs_.size(); ++k) {
    out_targets_[k] = arcs_[k].head;
    in_sources_[fill[arcs_[k].head]++] = arcs_[k].tail;
  }
  if (has_masks()) {
    out_mask_.assign(n, 0);
    in_mask_.assign(n, 0);
    for (const Arc& a : arcs_) {
      out_mask_[a.tail] |= std::uint64_t{1} << a.head;
      in_mask_[a.head] |= std::uint64_t{1} << a.tail;
    }
  }
}

std::span<const Vertex> Digraph::out_neighbors(Vertex v) const {
  return {out_targets_.data() + out_offsets_[v],
          static_cast<std::size_t>(out_offsets_[v + 1] - out_offsets_[v])};
}

std::span<const Vertex> Digraph::in_neighbors(Vertex v) const {
  return {in_sources_.data() + in_offsets_[v],
          static_cast<std::size_t>(in_offsets_[v + 1] - in_offsets_[v])};
}

int Digraph::out_degree(Vertex v) const { return out_offsets_[v + 1] - out_offsets_[v]; }
int Digraph::in_degree(Vertex v) const { return in_offsets_[v + 1] - in_offsets_[v]; }

bool Digraph::has_arc(Vertex tail, Vertex head) const {
  if (!contains(tail) || !contains(head)) return false;
  if (has_masks()) return (out_mask_[tail] >> head) & 1U;
  auto nbrs = out_neighbors(tail);
  return std::binary_search(nbrs.begin(), nbrs.end(), head);
}

Graph::Graph(int order, std::vector<Edge> edges) : order_(order), edges_(std::move(edges)) {
  check_order(order);
  for (Edge& e : edges_) {
    if (e.u == e.v) throw InvalidInput("self-loop at " + std::to_string(e.u));
    if (!contains(e.u) || !contains(e.v)) {
      throw InvalidInput("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         "} has an endpoint outside 0.." + std::to_string(order - 1));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  offsets_.assign(static_cast<std::size_t>(order_) + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (int i = 0; i < order_; ++i) offsets_[i + 1] += offsets_[i];
  adjacency_.resize(2 * edges_.size());
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    adjacency_[fill[e.u]++] = e.v;
    adjacency_[fill[e.v]++] = e.u;
  }
  for (int v = 0; v < order_; ++v) {
    std::sort(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1]);
  }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  return {adjacency_.data() + offsets_[v], static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
}

int Graph::degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

Digraph build_digraph(int order, std::span<const Arc> arcs) {
  return Digraph(order, std::vector<Arc>(arcs.begin(), arcs.end()));
}

Graph build_graph(int order, std::span<const Edge> edges) {
  return Graph(order, std::vector<Edge>(edges.begin(), edges.end()));
}

Digraph bidirect(const Graph& g) {
  std::vector<Arc> arcs;
  arcs.reserve(2 * g.size());
  for (const Edge& e : g.edges()) {
    arcs.push_back({e.u, e.v});
    arcs.push_back({e.v, e.u});
  }
  return Digraph(g.order(), std::move(arcs));
}

Graph underlying_graph(const Digraph& d) {
  std::vector<Edge> edges;
  edges.reserve(d.size());
  for (const Arc& a : d.arcs()) edges.push_back({a.tail, a.head});
  return Graph(d.order(), std::move(edges));
}

Digraph complement(const Digraph& d) {
  const int n = d.order();
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(n) * (n - 1) - d.size());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && !d.has_arc(u, v)) arcs.push_back({u, v});
    }
  }
  return Digraph(n, std::move(arcs));
}

Digraph with_arc(const Digraph& d, Arc alpha) {
  if (d.has_arc(alpha.tail, alpha.head)) {
    throw InvalidInput("arc " + arc_text(alpha) + " is already present");
  }
  std::vector<Arc> arcs(d.arcs().begin(), d.arcs().end());
  arcs.push_back(alpha);
  return Digraph(d.order(), std::move(arcs));
}

Digraph relabel(const Digraph& d, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != d.order()) throw InvalidInput("permutation size mismatch");
  std::vector<bool> seen(perm.size(), false);
  for (Vertex p : perm) {
    if (p < 0 || p >= d.order() || seen[p]) throw InvalidInput("not a permutation");
    seen[p] = true;
  }
  std::vector<Arc> arcs;
  arcs.reserve(d.size());
  for (const Arc& a : d.arcs()) arcs.push_back({perm[a.tail], perm[a.head]});
  return Digraph(d.order(), std::move(arcs));
}

Digraph directed_cycle(int n) {
  check_order(n);
  std::vector<Arc> arcs;
  if (n >= 2) {
    for (Vertex v = 0; v < n; ++v) arcs.push_back({v, (v + 1) % n});
  }
  return Digraph(n, std::move(arcs));
}

Digraph directed_path(int n) {
  check_order(n);
  std::vector<Arc> arcs;
  for (Vertex v = 0; v + 1 < n; ++v) arcs.push_back({v, v + 1});
  return Digraph(n, std::move(arcs));
}

Digraph complete_digraph(int n) { return bidirect(complete_graph(n)); }

Graph complete_graph(int n) {
  check_order(n);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
  check_order(n);
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw InvalidInput("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Graph(n, std::move(edges));
}

}  // namespace dgr
