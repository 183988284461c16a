#include <gtest/gtest.h>

#include <random>

#include "dgr/connectivity.hpp"
#include "dgr/constructions.hpp"
#include "dgr/distance.hpp"
#include "dgr/enumerate.hpp"
#include "dgr/errors.hpp"
#include "oracles.hpp"

using namespace dgr;

namespace {

Digraph remove_vertices(const Digraph& d, const std::vector<Vertex>& cut) {
  std::vector<int> index(d.order(), -1);
  int next = 0;
  for (Vertex v = 0; v < d.order(); ++v) {
    if (std::find(cut.begin(), cut.end(), v) == cut.end()) index[v] = next++;
  }
  std::vector<Arc> arcs;
  for (const Arc& a : d.arcs()) {
    if (index[a.tail] >= 0 && index[a.head] >= 0) arcs.push_back({index[a.tail], index[a.head]});
  }
  return build_digraph(next, arcs);
}

Digraph remove_arcs(const Digraph& d, const std::vector<Arc>& cut) {
  std::vector<Arc> arcs;
  for (const Arc& a : d.arcs()) {
    if (std::find(cut.begin(), cut.end(), a) == cut.end()) arcs.push_back(a);
  }
  return build_digraph(d.order(), arcs);
}

}  // namespace

TEST(VertexConnectivity, Examples) {
  EXPECT_EQ(vertex_connectivity(directed_cycle(5)).value, 1);
  const auto k4 = vertex_connectivity(complete_digraph(4));
  EXPECT_EQ(k4.value, 3);
  EXPECT_TRUE(k4.witness_cut.empty());
  const auto dpk = vertex_connectivity(kappa_pc_digraph({2, 1, 2, 1}));
  EXPECT_EQ(dpk.value, 2);
  EXPECT_EQ(dpk.witness_cut.size(), 2U);
  EXPECT_THROW(vertex_connectivity(directed_path(3)), NotStrong);
  EXPECT_THROW(vertex_connectivity(build_digraph(1, {})), InvalidInput);
}

TEST(EdgeConnectivity, Examples) {
  EXPECT_EQ(edge_connectivity(directed_cycle(5)).value, 1);
  EXPECT_EQ(edge_connectivity(bidirect(cycle_graph(4))).value, 2);
  EXPECT_EQ(edge_connectivity(complete_digraph(4)).value, 3);
  EXPECT_THROW(edge_connectivity(directed_path(3)), NotStrong);
}

TEST(Eulerian, Examples) {
  for (int n = 2; n <= 7; ++n) {
    EXPECT_TRUE(is_eulerian(directed_cycle(n)));
    EXPECT_TRUE(is_eulerian(complete_digraph(n)));
  }
  const auto dpk = kappa_pc_digraph({2, 1, 2, 1});
  EXPECT_FALSE(is_eulerian(dpk));
  EXPECT_EQ(dpk.out_degree(0), 2);
  EXPECT_EQ(dpk.in_degree(0), 5);
  // Balanced but not strong.
  const std::vector<Arc> two_cycles{{0, 1}, {1, 0}, {2, 3}, {3, 2}};
  EXPECT_FALSE(is_eulerian(build_digraph(4, two_cycles)));
}

TEST(MinSemidegree, Examples) {
  EXPECT_EQ(min_semidegree(directed_cycle(4)), 1);
  EXPECT_EQ(min_semidegree(complete_digraph(5)), 4);
  EXPECT_EQ(min_semidegree(kappa_pc_digraph({2, 1, 2, 1})), 2);
}

// Every strong digraph with n <= 4, plus random strong ones with n = 5,
// against subset-removal oracles; cuts must actually disconnect.
TEST(ConnectivityProperties, AgainstBruteForce) {
  auto check = [](const Digraph& d) {
    const auto adj = oracle::matrix_of(d);
    const auto k = vertex_connectivity(d);
    const auto l = edge_connectivity(d);
    ASSERT_EQ(k.value, oracle::kappa(adj));
    ASSERT_EQ(l.value, oracle::lambda(adj));
    EXPECT_LE(k.value, l.value);
    EXPECT_LE(l.value, min_semidegree(d));
    if (!k.witness_cut.empty()) {
      EXPECT_EQ(static_cast<int>(k.witness_cut.size()), k.value);
      EXPECT_FALSE(is_strong(remove_vertices(d, k.witness_cut)));
    }
    EXPECT_EQ(static_cast<int>(l.witness_cut.size()), l.value);
    EXPECT_FALSE(is_strong(remove_arcs(d, l.witness_cut)));
  };
  for (int n = 2; n <= 4; ++n) {
    for (const auto& d : enumerate_digraphs({n, {}, std::nullopt})) check(d);
  }
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) check(oracle::random_strong_digraph(rng, 5, 0.3 + 0.1 * (trial % 6)));
}

TEST(ConnectivityProperties, LocalConnectivity) {
  const auto d = kappa_pc_digraph({2, 1, 2, 1});
  EXPECT_EQ(local_vertex_connectivity(d, 0, 3), 2);
  EXPECT_EQ(local_edge_connectivity(d, 0, 5), 2);
  EXPECT_EQ(local_edge_connectivity(complete_digraph(5), 1, 3), 4);
}

TEST(ConnectivityProperties, BidirectedGraphsAreEulerian) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 7;
    std::vector<Edge> edges;
    std::bernoulli_distribution coin(0.5);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (coin(rng)) edges.push_back({u, v});
      }
    }
    const auto g = build_graph(n, edges);
    if (is_connected(g)) EXPECT_TRUE(is_eulerian(bidirect(g)));
  }
}
