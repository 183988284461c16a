#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dgr/digraph.hpp"

namespace dgr {

// Full sweeps iterate all 2^(n(n-1)) arc masks; n = 5 is 2^20.
inline constexpr int kExhaustiveCeiling = 5;
inline constexpr int kSampledCeiling = 6;

enum class ClassKind { strong, strong_kappa, eulerian, eulerian_kappa, eulerian_lambda, graph };

// Which digraphs a sweep keeps. Every class is a subclass of the strong
// digraphs; "graph" keeps the bidirected (symmetric) strong digraphs, i.e.
// connected graphs. The parameterised classes mean kappa(D) >= param or
// lambda(D) >= param.
struct ClassFilter {
  ClassKind kind = ClassKind::strong;
  int param = 0;

  // d is assumed strong.
  bool accepts_strong(const Digraph& d) const;
  bool accepts(const Digraph& d) const;
  std::string describe() const;
  // "strong", "eulerian", "graph", "strong_kappa(2)", "eulerian_lambda(3)", ...
  static ClassFilter parse(std::string_view text);
};

struct Sampling {
  std::uint64_t count = 0;  // number of pseudorandom masks drawn
  std::uint64_t seed = 0;
};

inline constexpr std::string_view kSamplerName = "mt19937_64, low n(n-1) bits per draw";

struct EnumerationSpec {
  int order = 0;
  ClassFilter filter;
  std::optional<Sampling> sampling;  // nullopt: exhaustive

  // Throws Infeasible beyond the ceilings, InvalidInput for order < 1.
  void validate() const;
};

int arc_cells(int n);
// The k-th off-diagonal cell of the n x n matrix in row-major order; bit k of
// an arc mask stands for this arc.
Arc cell_arc(int n, int k);
Digraph digraph_from_mask(int n, std::uint64_t mask);
std::uint64_t arc_mask(const Digraph& d);

// Masks drawn in sampled mode, in draw order.
std::vector<std::uint64_t> sampled_masks(int n, const Sampling& s);

// Calls visit for every digraph passing the filter, in mask order
// (exhaustive) or draw order (sampled).
void for_each_digraph(const EnumerationSpec& spec, const std::function<void(const Digraph&)>& visit);
std::vector<Digraph> enumerate_digraphs(const EnumerationSpec& spec);

}  // namespace dgr
