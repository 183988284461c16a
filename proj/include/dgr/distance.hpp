#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dgr/digraph.hpp"
#include "dgr/rational.hpp"

namespace dgr {

// nullopt marks an unreachable vertex.
using Distance = std::optional<int>;

enum class Execution { serial, parallel };

// X_D(v) = (n_0, ..., n_d): counts[i] vertices at distance i from source.
struct DistanceProfile {
  Vertex source = 0;
  std::vector<int> counts;

  int eccentricity() const { return static_cast<int>(counts.size()) - 1; }
  friend bool operator==(const DistanceProfile&, const DistanceProfile&) = default;
};

struct Remoteness {
  Rational value;
  Vertex witness = 0;  // smallest vertex attaining the maximum
};

std::vector<Distance> distances_from(const Digraph& d, Vertex source);
std::vector<Distance> distances_from(const Graph& g, Vertex source);

bool is_strong(const Digraph& d);
bool is_connected(const Graph& g);

// sigma(v, D). Throws Unreachable when some vertex cannot be reached from v.
std::int64_t transmission(const Digraph& d, Vertex v);
// sigma(v, D) / (n - 1). Throws InvalidInput for n = 1.
Rational avg_distance(const Digraph& d, Vertex v);

// Transmission of every vertex. Throws NotStrong if any source misses a
// vertex. The parallel variant runs one BFS per source across OpenMP threads
// and returns the same vector as the serial one.
std::vector<std::int64_t> all_transmissions(const Digraph& d, Execution exec = Execution::serial);

// max_v avg_distance(v). Throws NotStrong, or InvalidInput for n = 1.
Remoteness remoteness(const Digraph& d, Execution exec = Execution::serial);
// Same invariant computed on graph distances.
Remoteness remoteness(const Graph& g);

int eccentricity(const Digraph& d, Vertex v);
int diameter(const Digraph& d);
DistanceProfile distance_profile(const Digraph& d, Vertex v);

// Serial all_transmissions that reports a non-strong digraph as nullopt
// instead of throwing. The enumeration sweeps call this once per arc mask.
std::optional<std::vector<std::int64_t>> try_all_transmissions(const Digraph& d);

namespace detail {
// Queue BFS over adjacency lists (reference).
std::vector<Distance> bfs_queue(const Digraph& d, Vertex source);
// Frontier-as-bitset BFS; requires d.has_masks().
std::vector<Distance> bfs_bitset(const Digraph& d, Vertex source);
}  // namespace detail

}  // namespace dgr
