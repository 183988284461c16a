#pragma once

#include <vector>

#include "dgr/digraph.hpp"

namespace dgr {

// value plus a minimum cut realizing it. Removing the witness leaves a
// digraph that is not strong; the witness is empty only for the complete
// digraph, whose vertex-connectivity is n - 1 by convention.
template <class Element>
struct ConnectivityResult {
  int value = 0;
  std::vector<Element> witness_cut;
};

using VertexConnectivity = ConnectivityResult<Vertex>;
using EdgeConnectivity = ConnectivityResult<Arc>;

// kappa(D): minimum over ordered non-adjacent pairs (s, t) of the maximum
// number of internally disjoint s-t dipaths (vertex-split unit network).
// Throws NotStrong for non-strong input and InvalidInput for n < 2.
VertexConnectivity vertex_connectivity(const Digraph& d);

// lambda(D): minimum s-t arc cut with unit capacities. Uses the fact that
// lambda(D) = min over v != 0 of min(lambda(0, v), lambda(v, 0)).
EdgeConnectivity edge_connectivity(const Digraph& d);

// Maximum number of arc-disjoint s-t dipaths (local arc connectivity).
int local_edge_connectivity(const Digraph& d, Vertex s, Vertex t);
// Maximum number of internally vertex-disjoint s-t dipaths; (s, t) must not
// be an arc.
int local_vertex_connectivity(const Digraph& d, Vertex s, Vertex t);

// Strong and in-degree equals out-degree everywhere.
bool is_eulerian(const Digraph& d);

int min_semidegree(const Digraph& d);

}  // namespace dgr
