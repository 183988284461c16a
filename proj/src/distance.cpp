#include "dgr/distance.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "dgr/errors.hpp"

namespace dgr {

namespace {

void check_vertex(const Digraph& d, Vertex v) {
  if (!d.contains(v)) {
    throw InvalidInput("vertex " + std::to_string(v) + " outside 0.." + std::to_string(d.order() - 1));
  }
}

std::uint64_t all_vertices(int n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// Sum of distances from source, or nullopt if some vertex is unreachable.
std::optional<std::int64_t> bitset_transmission(const Digraph& d, Vertex source) {
  const std::uint64_t everyone = all_vertices(d.order());
  std::uint64_t visited = std::uint64_t{1} << source;
  std::uint64_t frontier = visited;
  std::int64_t total = 0;
  for (int level = 1; frontier != 0 && visited != everyone; ++level) {
    std::uint64_t next = 0;
    for (auto bits = frontier; bits != 0; bits &= bits - 1) next |= d.out_mask(std::countr_zero(bits));
    next &= ~visited;
    total += static_cast<std::int64_t>(level) * std::popcount(next);
    visited |= next;
    frontier = next;
  }
  if (visited != everyone) return std::nullopt;
  return total;
}

std::optional<std::int64_t> queue_transmission(const Digraph& d, Vertex source) {
  std::int64_t total = 0;
  for (const Distance& x : detail::bfs_queue(d, source)) {
    if (!x) return std::nullopt;
    total += *x;
  }
  return total;
}

std::optional<std::int64_t> source_transmission(const Digraph& d, Vertex source) {
  return d.has_masks() ? bitset_transmission(d, source) : queue_transmission(d, source);
}

std::vector<Distance> checked_distances(const Digraph& d, Vertex v) {
  auto dist = distances_from(d, v);
  for (Vertex w = 0; w < d.order(); ++w) {
    if (!dist[w]) {
      throw Unreachable("vertex " + std::to_string(w) + " is unreachable from " + std::to_string(v));
    }
  }
  return dist;
}

Remoteness max_average(const std::vector<std::int64_t>& sigma) {
  const auto n = static_cast<std::int64_t>(sigma.size());
  const auto best = std::max_element(sigma.begin(), sigma.end());
  return {Rational(*best, n - 1), static_cast<Vertex>(best - sigma.begin())};
}

}  // namespace

namespace detail {

std::vector<Distance> bfs_queue(const Digraph& d, Vertex source) {
  std::vector<Distance> dist(static_cast<std::size_t>(d.order()));
  std::vector<Vertex> queue;
  queue.reserve(dist.size());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : d.out_neighbors(u)) {
      if (!dist[w]) {
        dist[w] = *dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<Distance> bfs_bitset(const Digraph& d, Vertex source) {
  std::vector<Distance> dist(static_cast<std::size_t>(d.order()));
  std::uint64_t visited = std::uint64_t{1} << source;
  std::uint64_t frontier = visited;
  dist[source] = 0;
  for (int level = 1; frontier != 0; ++level) {
    std::uint64_t next = 0;
    for (auto bits = frontier; bits != 0; bits &= bits - 1) next |= d.out_mask(std::countr_zero(bits));
    next &= ~visited;
    for (auto bits = next; bits != 0; bits &= bits - 1) dist[std::countr_zero(bits)] = level;
    visited |= next;
    frontier = next;
  }
  return dist;
}

}  // namespace detail

std::vector<Distance> distances_from(const Digraph& d, Vertex source) {
  check_vertex(d, source);
  return d.has_masks() ? detail::bfs_bitset(d, source) : detail::bfs_queue(d, source);
}

std::vector<Distance> distances_from(const Graph& g, Vertex source) {
  if (!g.contains(source)) {
    throw InvalidInput("vertex " + std::to_string(source) + " outside 0.." + std::to_string(g.order() - 1));
  }
  std::vector<Distance> dist(static_cast<std::size_t>(g.order()));
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (!dist[w]) {
        dist[w] = *dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

bool is_strong(const Digraph& d) {
  // Strong iff vertex 0 reaches everything in D and in the reverse of D.
  const int n = d.order();
  if (n == 1) return true;
  auto reaches_all = [&](auto&& neighbours) {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : neighbours(u)) {
        if (!seen[w]) {
          seen[w] = true;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == n;
  };
  return reaches_all([&](Vertex u) { return d.out_neighbors(u); }) &&
         reaches_all([&](Vertex u) { return d.in_neighbors(u); });
}

bool is_connected(const Graph& g) {
  const auto dist = distances_from(g, 0);
  return std::all_of(dist.begin(), dist.end(), [](const Distance& x) { return x.has_value(); });
}

std::int64_t transmission(const Digraph& d, Vertex v) {
  check_vertex(d, v);
  auto sigma = source_transmission(d, v);
  if (!sigma) checked_distances(d, v);  // throws with the offending vertex
  return *sigma;
}

Rational avg_distance(const Digraph& d, Vertex v) {
  if (d.order() < 2) throw InvalidInput("average distance needs at least 2 vertices");
  return Rational(transmission(d, v), d.order() - 1);
}

std::vector<std::int64_t> all_transmissions(const Digraph& d, Execution exec) {
  const int n = d.order();
  std::vector<std::int64_t> sigma(static_cast<std::size_t>(n), 0);
  if (exec == Execution::serial) {
    for (Vertex v = 0; v < n; ++v) {
      auto s = source_transmission(d, v);
      if (!s) throw NotStrong("digraph is not strong: vertex " + std::to_string(v) + " misses a vertex");
      sigma[v] = *s;
    }
    return sigma;
  }
  // Parallel: each source writes its own slot; the first failing source is
  // found afterwards so the error matches the serial one.
  std::vector<char> ok(static_cast<std::size_t>(n), 1);
#pragma omp parallel for schedule(dynamic, 16)
  for (Vertex v = 0; v < n; ++v) {
    auto s = source_transmission(d, v);
    if (s) {
      sigma[v] = *s;
    } else {
      ok[v] = 0;
    }
  }
  if (auto bad = std::find(ok.begin(), ok.end(), 0); bad != ok.end()) {
    throw NotStrong("digraph is not strong: vertex " + std::to_string(bad - ok.begin()) +
                    " misses a vertex");
  }
  return sigma;
}

std::optional<std::vector<std::int64_t>> try_all_transmissions(const Digraph& d) {
  std::vector<std::int64_t> sigma(static_cast<std::size_t>(d.order()), 0);
  for (Vertex v = 0; v < d.order(); ++v) {
    auto s = source_transmission(d, v);
    if (!s) return std::nullopt;
    sigma[v] = *s;
  }
  return sigma;
}

Remoteness remoteness(const Digraph& d, Execution exec) {
  if (d.order() < 2) throw InvalidInput("remoteness is undefined for a single vertex");
  return max_average(all_transmissions(d, exec));
}

Remoteness remoteness(const Graph& g) {
  if (g.order() < 2) throw InvalidInput("remoteness is undefined for a single vertex");
  std::vector<std::int64_t> sigma(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    for (const Distance& x : distances_from(g, v)) {
      if (!x) throw NotStrong("graph is not connected");
      sigma[v] += *x;
    }
  }
  return max_average(sigma);
}

int eccentricity(const Digraph& d, Vertex v) {
  check_vertex(d, v);
  const auto dist = checked_distances(d, v);
  return **std::max_element(dist.begin(), dist.end());
}

int diameter(const Digraph& d) {
  if (!is_strong(d)) throw NotStrong("diameter of a non-strong digraph");
  int diam = 0;
  for (Vertex v = 0; v < d.order(); ++v) diam = std::max(diam, eccentricity(d, v));
  return diam;
}

DistanceProfile distance_profile(const Digraph& d, Vertex v) {
  check_vertex(d, v);
  const auto dist = checked_distances(d, v);
  DistanceProfile profile{v, std::vector<int>(static_cast<std::size_t>(**std::max_element(dist.begin(), dist.end())) + 1, 0)};
  for (const Distance& x : dist) ++profile.counts[*x];
  return profile;
}

}  // namespace dgr
