#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dgr/digraph.hpp"
#include "dgr/rational.hpp"

namespace dgr {

// K_1 <+ [K_kappa]^ell <+ K_a <+ K_b (digraph) or K_1 + [K_kappa]^ell + K_a + K_b
// (graph). Order is 1 + ell*kappa + a + b. ell = 0 is only accepted with
// relaxed_ell set.
struct PathCompleteParams {
  int kappa = 1;
  int ell = 1;
  int a = 1;
  int b = 1;
  bool relaxed_ell = false;

  int order() const { return 1 + ell * kappa + a + b; }
  std::vector<int> block_sizes() const;
  void validate() const;  // throws InvalidInput
  std::string describe() const;

  friend bool operator==(const PathCompleteParams&, const PathCompleteParams&) = default;
};

enum class LambdaVariant { A, B, C };

// The three shapes of a lambda-edge-connected path-complete graph:
//   A: [K_1 + K_lambda]^k + K_a + K_b           (k >= 1, a*b >= lambda)
//   B: [K_1 + K_lambda]^k + K_1 + K_a + K_b     (a >= lambda)
//   C: [K_1 + K_3]^k + K_2 + K_a + K_1          (lambda = 3, k >= 1, a >= 3; b unused)
struct LambdaPCParams {
  int lambda = 2;
  int k = 1;
  int a = 1;
  int b = 1;
  LambdaVariant variant = LambdaVariant::A;

  std::vector<int> block_sizes() const;
  int order() const;
  void validate() const;  // throws InvalidInput
  std::string describe() const;

  friend bool operator==(const LambdaPCParams&, const LambdaPCParams&) = default;
};

char to_char(LambdaVariant v);
LambdaVariant parse_variant(std::string_view text);

// K_{a_1} + ... + K_{a_t}: complete blocks, consecutive blocks fully joined.
Graph sequential_sum_graph(std::span<const int> block_sizes);
// Bidirected sequential sum.
Digraph profile_digraph(std::span<const int> block_sizes);
// D_1 <+ ... <+ D_t over complete blocks: consecutive blocks joined in both
// directions, plus every arc from block i to each block j <= i - 2.
// Vertices are numbered block by block.
Digraph backward_sum(std::span<const int> block_sizes);

Digraph kappa_pc_digraph(const PathCompleteParams& p);
Graph pc_graph(const PathCompleteParams& p);
Graph lambda_pc_graph(const LambdaPCParams& p);

// All (ell, a, b) with 1 + ell*kappa + a + b = n, a >= kappa, b >= 1 and
// ell >= 1 (ell >= 0 when relaxed), ordered by ell then a.
std::vector<PathCompleteParams> path_complete_family(int n, int kappa, bool relaxed_ell = false);
// All variants and parameters of order n, ordered by variant, k, a.
std::vector<LambdaPCParams> lambda_pc_family(int n, int lambda);

template <class Object, class Params>
struct Selection {
  Object object;
  Params params;
  std::int64_t size = 0;
};

using DigraphSelection = Selection<Digraph, PathCompleteParams>;
using GraphSelection = Selection<Graph, PathCompleteParams>;
using LambdaSelection = Selection<Graph, LambdaPCParams>;

// DPK_{n,m,kappa}: the family member of minimum size among those with size
// >= m. Sizes are counted on the built digraphs; a repeated size among
// family members raises std::logic_error. Throws Infeasible if the family is
// empty or m exceeds its maximum.
DigraphSelection dpk_select(int n, std::int64_t m, int kappa);
// PK_{n,m,kappa}, the undirected analogue.
GraphSelection pk_select(int n, std::int64_t m, int kappa);
// PK^lambda_{n,m}. Equal sizes across variants are broken by the larger
// remoteness, then by family order.
LambdaSelection pk_lambda_select(int n, std::int64_t m, int lambda);

// v_0 -> v_1 -> ... -> v_{n-1} plus the given backward arcs (tail > head).
// Throws InvalidInput for any arc with tail <= head and NotStrong when the
// result is not strong.
Digraph shortcut_free_dipath(int n, std::span<const Arc> back_arcs);

// Arc or edge count of the object actually built.
std::int64_t construction_size(const PathCompleteParams& p);
std::int64_t construction_size(const LambdaPCParams& p);
std::int64_t construction_size(std::span<const int> block_sizes);

// Closed-form values quoted for kappa-connected path-complete digraphs, kept
// for auditing against direct counts.
struct ClaimedSizes {
  // m(H) for the prefix H = K_1 <+ [K_kappa]^ell: ell*kappa^2*(ell+3)/2 - kappa*(kappa-1).
  Rational prefix_size;
  // m* = m(H) + (a+b)(a+b-1) + 2*kappa*a + (a+b)*ell*kappa - (kappa-1)*a + b.
  Rational m_star_expansion;
  // sigma(v_0) = kappa*ell*(ell+1)/2 + (ell+1)(a+b) + b.
  Rational source_transmission;
  // Family maximum as stated: n^2 - 2n - 1.
  std::int64_t family_max = 0;
  // Family minimum as stated: n(3*kappa + n)/2 - n - kappa^2 - b'(kappa - b'),
  // b' in {1..kappa}, b' = n - 1 (mod kappa).
  Rational family_min;
};

ClaimedSizes claimed_sizes(const PathCompleteParams& p);
Rational claimed_family_min(int n, int kappa);
std::int64_t claimed_family_max(int n);

// Size of the prefix K_1 <+ [K_kappa]^ell, counted.
std::int64_t prefix_size(int kappa, int ell);

}  // namespace dgr
