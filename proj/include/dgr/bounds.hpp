#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dgr/rational.hpp"

namespace dgr {

// Upper bounds on remoteness.
//   order            graphs:  n/2
//   digraph_order    strong digraphs, n >= 3:  n/2
//   order_size       graphs of size >= m:  (n+2)/2 - m/(n-1)
//   kappa_graph      kappa-connected graphs, m <= C(n-1,2):
//                    n/(2k) + 2 - 1/k - (k-1)/(n-1) - m/(k(n-1))
//   lambda_graph     lambda-edge-connected graphs, lambda in {2,3}, piecewise in m
//   kappa_digraph    kappa-connected strong digraphs, m <= n^2-2n-1:
//                    n/k + 2 - 1/k - (k-1)/(n-1) - m*/(k(n-1))
//   size_digraph     strong digraphs, m <= n^2-2n-1:  n + 1 - m/(n-1)
//   eulerian_kappa   kappa-connected Eulerian digraphs of size >= 2 m_0 (kappa_graph form)
//   eulerian_size    Eulerian digraphs of size >= 2 m_0:  (n+2)/2 - m_0/(n-1)
//   eulerian_lambda  lambda-edge-connected Eulerian digraphs, piecewise in m_0
enum class BoundId {
  order,
  digraph_order,
  order_size,
  kappa_graph,
  lambda_graph,
  kappa_digraph,
  size_digraph,
  eulerian_kappa,
  eulerian_size,
  eulerian_lambda,
};

std::string_view to_string(BoundId id);
BoundId parse_bound_id(std::string_view text);  // throws InvalidInput
std::span<const BoundId> all_bounds();

bool needs_size(BoundId id);
bool needs_kappa(BoundId id);
bool needs_lambda(BoundId id);
// Eulerian bounds read m as m_0 (half the arc count).
bool is_eulerian_bound(BoundId id);

struct BoundQuery {
  BoundId bound = BoundId::order;
  int n = 0;
  std::optional<Rational> m;  // m, or m_0 for the Eulerian bounds
  std::optional<int> kappa;
  std::optional<int> lambda;
};

struct BoundResult {
  BoundQuery query;
  std::optional<Rational> value;  // present iff applicable
  bool applicable = false;
  bool sharpness_conditions_met = false;
  std::optional<std::int64_t> m_star;  // kappa_digraph and size_digraph only
  std::vector<std::string> notes;      // failed guards, by name
};

// Smallest integer m* >= m with m* = n^2 - 2n - 1 (mod kappa).
std::int64_t m_star(int n, const Rational& m, int kappa);
// Smallest integer >= m congruent to anchor modulo kappa.
std::int64_t round_up_to_class(const Rational& m, std::int64_t anchor, int kappa);

// Throws InvalidInput when a required parameter is missing or out of domain
// (n below the bound's minimum, kappa < 1, lambda not in {2, 3}).
BoundResult evaluate(const BoundQuery& q);
// The bound's expression at q, ignoring the hypothesis range. Used by the
// sweeps to report behaviour outside the stated range.
Rational formula_value(const BoundQuery& q);

struct SharpnessReport {
  bool met = false;
  std::vector<std::string> reasons;  // failed clauses
  // kappa_digraph / size_digraph: set when the stated clauses disagree with
  // the directly counted family (whether m is the size of a family member).
  bool audit_flagged = false;
  std::string audit_note;
};

// Evaluates the stated congruence and range clauses for equality / sharpness.
// Throws InvalidInput for bounds whose parameter is missing.
SharpnessReport sharpness_guard(BoundId id, int n, const Rational& m, std::optional<int> kappa_or_lambda);

std::int64_t binomial2(std::int64_t n);

}  // namespace dgr
