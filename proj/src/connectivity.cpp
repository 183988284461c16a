#include "dgr/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "dgr/distance.hpp"
#include "dgr/errors.hpp"

namespace dgr {

namespace {

// Residual network for small integral max-flow problems. Augmenting paths
// are found by BFS; every augmentation carries one unit, which is all the
// unit-capacity problems here need.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : first_(static_cast<std::size_t>(nodes), -1) {}

  void add_edge(int from, int to, int capacity) {
    push(from, to, capacity);
    push(to, from, 0);
  }

  void reset() {
    for (auto& e : edges_) e.residual = e.capacity;
  }

  // Stops early once the flow reaches limit.
  int max_flow(int source, int sink, int limit) {
    int flow = 0;
    std::vector<int> via(first_.size());
    std::vector<int> queue;
    queue.reserve(first_.size());
    while (flow < limit) {
      std::fill(via.begin(), via.end(), -1);
      queue.clear();
      queue.push_back(source);
      via[source] = -2;
      for (std::size_t head = 0; head < queue.size() && via[sink] == -1; ++head) {
        const int u = queue[head];
        for (int k = first_[u]; k != -1; k = edges_[k].next) {
          const int w = edges_[k].to;
          if (edges_[k].residual > 0 && via[w] == -1) {
            via[w] = k;
            queue.push_back(w);
          }
        }
      }
      if (via[sink] == -1) break;
      for (int w = sink; w != source;) {
        const int k = via[w];
        --edges_[k].residual;
        ++edges_[k ^ 1].residual;
        w = edges_[k ^ 1].to;
      }
      ++flow;
    }
    return flow;
  }

  // Nodes reachable from source in the residual network.
  std::vector<bool> source_side(int source) const {
    std::vector<bool> seen(first_.size(), false);
    std::vector<int> stack{source};
    seen[source] = true;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int k = first_[u]; k != -1; k = edges_[k].next) {
        if (edges_[k].residual > 0 && !seen[edges_[k].to]) {
          seen[edges_[k].to] = true;
          stack.push_back(edges_[k].to);
        }
      }
    }
    return seen;
  }

 private:
  struct Edge {
    int to;
    int capacity;
    int residual;
    int next;
  };

  void push(int from, int to, int capacity) {
    edges_.push_back({to, capacity, capacity, first_[from]});
    first_[from] = static_cast<int>(edges_.size()) - 1;
  }

  std::vector<int> first_;
  std::vector<Edge> edges_;
};

// Node 2v is v_in, 2v + 1 is v_out. Internal edges have capacity 1; arcs get
// capacity n so that a minimum cut only ever uses internal edges.
FlowNetwork split_network(const Digraph& d) {
  const int n = d.order();
  FlowNetwork net(2 * n);
  for (Vertex v = 0; v < n; ++v) net.add_edge(2 * v, 2 * v + 1, 1);
  for (const Arc& a : d.arcs()) net.add_edge(2 * a.tail + 1, 2 * a.head, n);
  return net;
}

FlowNetwork arc_network(const Digraph& d) {
  FlowNetwork net(d.order());
  for (const Arc& a : d.arcs()) net.add_edge(a.tail, a.head, 1);
  return net;
}

void require_strong(const Digraph& d, const char* what) {
  if (d.order() < 2) throw InvalidInput(std::string(what) + " needs at least 2 vertices");
  if (!is_strong(d)) throw NotStrong(std::string(what) + " is only defined for strong digraphs");
}

}  // namespace

VertexConnectivity vertex_connectivity(const Digraph& d) {
  require_strong(d, "vertex-connectivity");
  const int n = d.order();
  VertexConnectivity result{n - 1, {}};
  FlowNetwork net = split_network(d);
  int best_s = -1;
  int best_t = -1;
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = 0; t < n; ++t) {
      if (s == t || d.has_arc(s, t)) continue;
      net.reset();
      const int flow = net.max_flow(2 * s + 1, 2 * t, result.value);
      if (flow < result.value || best_s < 0) {
        result.value = flow;
        best_s = s;
        best_t = t;
      }
    }
  }
  if (best_s >= 0) {
    net.reset();
    net.max_flow(2 * best_s + 1, 2 * best_t, n);
    const auto side = net.source_side(2 * best_s + 1);
    for (Vertex v = 0; v < n; ++v) {
      if (side[2 * v] && !side[2 * v + 1]) result.witness_cut.push_back(v);
    }
  }
  return result;
}

EdgeConnectivity edge_connectivity(const Digraph& d) {
  require_strong(d, "edge-connectivity");
  const int n = d.order();
  FlowNetwork net = arc_network(d);
  int best = std::numeric_limits<int>::max();
  Vertex best_s = 0;
  Vertex best_t = 1;
  for (Vertex v = 1; v < n; ++v) {
    for (auto [s, t] : {std::pair{0, v}, std::pair{v, 0}}) {
      net.reset();
      const int flow = net.max_flow(s, t, best == std::numeric_limits<int>::max() ? n * n : best);
      if (flow < best) {
        best = flow;
        best_s = s;
        best_t = t;
      }
    }
  }
  net.reset();
  net.max_flow(best_s, best_t, n * n);
  const auto side = net.source_side(best_s);
  EdgeConnectivity result{best, {}};
  for (const Arc& a : d.arcs()) {
    if (side[a.tail] && !side[a.head]) result.witness_cut.push_back(a);
  }
  return result;
}

int local_edge_connectivity(const Digraph& d, Vertex s, Vertex t) {
  if (!d.contains(s) || !d.contains(t) || s == t) throw InvalidInput("need two distinct vertices");
  FlowNetwork net = arc_network(d);
  return net.max_flow(s, t, std::numeric_limits<int>::max());
}

int local_vertex_connectivity(const Digraph& d, Vertex s, Vertex t) {
  if (!d.contains(s) || !d.contains(t) || s == t) throw InvalidInput("need two distinct vertices");
  if (d.has_arc(s, t)) throw InvalidInput("local vertex-connectivity of adjacent vertices");
  FlowNetwork net = split_network(d);
  return net.max_flow(2 * s + 1, 2 * t, std::numeric_limits<int>::max());
}

bool is_eulerian(const Digraph& d) {
  for (Vertex v = 0; v < d.order(); ++v) {
    if (d.in_degree(v) != d.out_degree(v)) return false;
  }
  return is_strong(d);
}

int min_semidegree(const Digraph& d) {
  int best = std::numeric_limits<int>::max();
  for (Vertex v = 0; v < d.order(); ++v) best = std::min({best, d.in_degree(v), d.out_degree(v)});
  return best;
}

}  // namespace dgr
