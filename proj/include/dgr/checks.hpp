#pragma once

#include <cstdint>
#include <optional>

#include "dgr/bounds.hpp"
#include "dgr/digraph.hpp"
#include "dgr/enumerate.hpp"
#include "dgr/report.hpp"

namespace dgr {

inline constexpr int kMonotonicityCeiling = 9;
inline constexpr int kAuditCeiling = 12;

// True iff D has a Hamiltonian dipath v_0 ... v_{n-1} with no arc
// v_i -> v_j for j > i + 1 (the equality structure of the order bound).
bool has_shortcut_free_hamiltonian_dipath(const Digraph& d);

// The class a universal check uses when none is given: graph bounds run
// over bidirected graphs, Eulerian bounds over Eulerian digraphs, the rest
// over strong digraphs.
ClassFilter default_class(BoundId bound);

struct UniversalCheck {
  int order = 0;
  ClassFilter filter;
  BoundId bound = BoundId::digraph_order;
  std::optional<Sampling> sampling;
};

// rho(D) <= bound at the digraph's own n, m (m_0 = m/2 for Eulerian bounds,
// edge count for graph bounds), kappa(D), min(lambda(D), 3). Digraphs
// outside the bound's stated range are evaluated with the raw formula and
// reported apart. For the order bounds, equality witnesses are tested
// against the shortcut-free Hamiltonian dipath structure in both directions.
CheckReport check_universal_bound(const UniversalCheck& check, int workers = 1);

// Among kappa-connected strong digraphs of order n <= 5 and size >= m, the
// ones attaining rho(DPK_{n,m,kappa}) must be isomorphic to DPK. Requires m
// in the stated congruence class and equal to the size of a family member;
// throws InvalidInput otherwise, Infeasible for n > 5.
CheckReport check_extremal_uniqueness(int n, std::int64_t m, int kappa, int workers = 1);

// Over the path-complete families with order <= n_max (<= 9) and
// kappa <= kappa_max: adding a complement arc strictly lowers remoteness,
// and within each (n, kappa) sizes are distinct with the size order
// reversing the remoteness order.
CheckReport check_lemma_monotonicity(int n_max, int kappa_max);

// For each Eulerian D of order n <= 5 and each vertex of maximum
// eccentricity: m(D) <= 2 m(K_{n_0} + ... + K_{n_d}), with equality only for
// the bidirected sequential sum.
CheckReport check_eulerian_size_theorem(int n, int workers = 1);

// Records claimed closed forms for the path-complete family next to direct
// counts; never fails.
CheckReport audit_size_formulas(int n, int kappa);

}  // namespace dgr
