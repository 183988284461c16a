#include "dgr/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "dgr/distance.hpp"
#include "dgr/errors.hpp"

namespace dgr {

namespace {

void check_blocks(std::span<const int> blocks) {
  if (blocks.empty()) throw InvalidInput("block list is empty");
  for (int s : blocks) {
    if (s < 1) throw InvalidInput("block sizes must be positive");
  }
}

// First vertex of each block, plus the total order at the end.
std::vector<int> block_starts(std::span<const int> blocks) {
  std::vector<int> starts(blocks.size() + 1, 0);
  std::partial_sum(blocks.begin(), blocks.end(), starts.begin() + 1);
  return starts;
}

void check_distinct_sizes(const std::vector<std::int64_t>& sizes, int n, int kappa, const char* family) {
  auto sorted = sizes;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::logic_error(std::string(family) + " family of order " + std::to_string(n) +
                           ", kappa " + std::to_string(kappa) + " has two members of equal size");
  }
}

}  // namespace

std::vector<int> PathCompleteParams::block_sizes() const {
  std::vector<int> blocks{1};
  blocks.insert(blocks.end(), static_cast<std::size_t>(std::max(ell, 0)), kappa);
  blocks.push_back(a);
  blocks.push_back(b);
  return blocks;
}

void PathCompleteParams::validate() const {
  if (kappa < 1) throw InvalidInput("kappa must be positive");
  if (ell < 0 || (ell == 0 && !relaxed_ell)) {
    throw InvalidInput("ell must be at least 1 (ell = 0 needs relaxed mode)");
  }
  if (b < 1) throw InvalidInput("b must be positive");
  if (a < kappa) throw InvalidInput("a must be at least kappa (a = " + std::to_string(a) + ")");
}

std::string PathCompleteParams::describe() const {
  return "kappa=" + std::to_string(kappa) + " ell=" + std::to_string(ell) + " a=" + std::to_string(a) +
         " b=" + std::to_string(b);
}

char to_char(LambdaVariant v) { return v == LambdaVariant::A ? 'A' : v == LambdaVariant::B ? 'B' : 'C'; }

LambdaVariant parse_variant(std::string_view text) {
  if (text == "A" || text == "a") return LambdaVariant::A;
  if (text == "B" || text == "b") return LambdaVariant::B;
  if (text == "C" || text == "c") return LambdaVariant::C;
  throw InvalidInput("variant must be A, B or C");
}

std::vector<int> LambdaPCParams::block_sizes() const {
  std::vector<int> blocks;
  for (int i = 0; i < k; ++i) {
    blocks.push_back(1);
    blocks.push_back(variant == LambdaVariant::C ? 3 : lambda);
  }
  switch (variant) {
    case LambdaVariant::A: blocks.insert(blocks.end(), {a, b}); break;
    case LambdaVariant::B: blocks.insert(blocks.end(), {1, a, b}); break;
    case LambdaVariant::C: blocks.insert(blocks.end(), {2, a, 1}); break;
  }
  return blocks;
}

int LambdaPCParams::order() const {
  const auto blocks = block_sizes();
  return std::accumulate(blocks.begin(), blocks.end(), 0);
}

void LambdaPCParams::validate() const {
  if (lambda != 2 && lambda != 3) throw InvalidInput("lambda must be 2 or 3");
  if (k < 0) throw InvalidInput("k must be nonnegative");
  if (a < 1 || b < 1) throw InvalidInput("a and b must be positive");
  switch (variant) {
    case LambdaVariant::A:
      if (k < 1 || a * b < lambda) throw InvalidInput("variant A requires k >= 1 and a*b >= lambda");
      break;
    case LambdaVariant::B:
      if (a < lambda) throw InvalidInput("variant B requires a >= lambda");
      break;
    case LambdaVariant::C:
      if (lambda != 3 || k < 1 || a < 3) throw InvalidInput("variant C requires lambda = 3, k >= 1 and a >= 3");
      if (b != 1) throw InvalidInput("variant C ends in K_1, so b must be 1");
      break;
  }
}

std::string LambdaPCParams::describe() const {
  return "lambda=" + std::to_string(lambda) + " variant=" + to_char(variant) + " k=" + std::to_string(k) +
         " a=" + std::to_string(a) + " b=" + std::to_string(b);
}

Graph sequential_sum_graph(std::span<const int> blocks) {
  check_blocks(blocks);
  const auto starts = block_starts(blocks);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (int u = starts[i]; u < starts[i + 1]; ++u) {
      for (int v = u + 1; v < starts[i + 1]; ++v) edges.push_back({u, v});
      if (i + 1 < blocks.size()) {
        for (int v = starts[i + 1]; v < starts[i + 2]; ++v) edges.push_back({u, v});
      }
    }
  }
  return Graph(starts.back(), std::move(edges));
}

Digraph profile_digraph(std::span<const int> blocks) { return bidirect(sequential_sum_graph(blocks)); }

Digraph backward_sum(std::span<const int> blocks) {
  check_blocks(blocks);
  const auto starts = block_starts(blocks);
  const std::size_t t = blocks.size();
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < t; ++i) {
    for (int u = starts[i]; u < starts[i + 1]; ++u) {
      for (int v = starts[i]; v < starts[i + 1]; ++v) {
        if (u != v) arcs.push_back({u, v});
      }
      if (i + 1 < t) {
        for (int v = starts[i + 1]; v < starts[i + 2]; ++v) {
          arcs.push_back({u, v});
          arcs.push_back({v, u});
        }
      }
      for (std::size_t j = 0; j + 2 <= i; ++j) {
        for (int v = starts[j]; v < starts[j + 1]; ++v) arcs.push_back({u, v});
      }
    }
  }
  return Digraph(starts.back(), std::move(arcs));
}

Digraph kappa_pc_digraph(const PathCompleteParams& p) {
  p.validate();
  return backward_sum(p.block_sizes());
}

Graph pc_graph(const PathCompleteParams& p) {
  p.validate();
  return sequential_sum_graph(p.block_sizes());
}

Graph lambda_pc_graph(const LambdaPCParams& p) {
  p.validate();
  return sequential_sum_graph(p.block_sizes());
}

std::vector<PathCompleteParams> path_complete_family(int n, int kappa, bool relaxed_ell) {
  if (kappa < 1) throw InvalidInput("kappa must be positive");
  std::vector<PathCompleteParams> family;
  for (int ell = relaxed_ell ? 0 : 1; 1 + ell * kappa + kappa + 1 <= n; ++ell) {
    for (int a = kappa; 1 + ell * kappa + a + 1 <= n; ++a) {
      const int b = n - 1 - ell * kappa - a;
      family.push_back({kappa, ell, a, b, relaxed_ell});
    }
  }
  return family;
}

std::vector<LambdaPCParams> lambda_pc_family(int n, int lambda) {
  if (lambda != 2 && lambda != 3) throw InvalidInput("lambda must be 2 or 3");
  std::vector<LambdaPCParams> family;
  // Variant A: k(1 + lambda) + a + b = n.
  for (int k = 1; k * (1 + lambda) + 2 <= n; ++k) {
    for (int a = 1; k * (1 + lambda) + a + 1 <= n; ++a) {
      const int b = n - k * (1 + lambda) - a;
      if (a * b >= lambda) family.push_back({lambda, k, a, b, LambdaVariant::A});
    }
  }
  // Variant B: k(1 + lambda) + 1 + a + b = n.
  for (int k = 0; k * (1 + lambda) + 1 + lambda + 1 <= n; ++k) {
    for (int a = lambda; k * (1 + lambda) + 1 + a + 1 <= n; ++a) {
      const int b = n - k * (1 + lambda) - 1 - a;
      family.push_back({lambda, k, a, b, LambdaVariant::B});
    }
  }
  // Variant C: 4k + 2 + a + 1 = n.
  if (lambda == 3) {
    for (int k = 1; 4 * k + 3 + 3 <= n; ++k) {
      family.push_back({3, k, n - 4 * k - 3, 1, LambdaVariant::C});
    }
  }
  return family;
}

DigraphSelection dpk_select(int n, std::int64_t m, int kappa) {
  const auto family = path_complete_family(n, kappa);
  if (family.empty()) {
    throw Infeasible("no kappa-connected path-complete digraph of order " + std::to_string(n) +
                     " with kappa " + std::to_string(kappa));
  }
  std::vector<std::int64_t> sizes;
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < family.size(); ++i) {
    sizes.push_back(construction_size(family[i]));
    if (sizes[i] >= m && (!best || sizes[i] < sizes[*best])) best = i;
  }
  check_distinct_sizes(sizes, n, kappa, "DPK");
  if (!best) {
    throw Infeasible("m = " + std::to_string(m) + " exceeds the family maximum " +
                     std::to_string(*std::max_element(sizes.begin(), sizes.end())));
  }
  return {kappa_pc_digraph(family[*best]), family[*best], sizes[*best]};
}

GraphSelection pk_select(int n, std::int64_t m, int kappa) {
  const auto family = path_complete_family(n, kappa);
  if (family.empty()) {
    throw Infeasible("no kappa-connected path-complete graph of order " + std::to_string(n) +
                     " with kappa " + std::to_string(kappa));
  }
  std::vector<std::int64_t> sizes;
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < family.size(); ++i) {
    sizes.push_back(static_cast<std::int64_t>(pc_graph(family[i]).size()));
    if (sizes[i] >= m && (!best || sizes[i] < sizes[*best])) best = i;
  }
  check_distinct_sizes(sizes, n, kappa, "PK");
  if (!best) {
    throw Infeasible("m = " + std::to_string(m) + " exceeds the family maximum " +
                     std::to_string(*std::max_element(sizes.begin(), sizes.end())));
  }
  return {pc_graph(family[*best]), family[*best], sizes[*best]};
}

LambdaSelection pk_lambda_select(int n, std::int64_t m, int lambda) {
  const auto family = lambda_pc_family(n, lambda);
  if (family.empty()) {
    throw Infeasible("no " + std::to_string(lambda) + "-edge-connected path-complete graph of order " +
                     std::to_string(n));
  }
  std::optional<LambdaSelection> best;
  std::optional<Rational> best_rho;
  std::int64_t largest = 0;
  for (const auto& p : family) {
    Graph g = lambda_pc_graph(p);
    const auto size = static_cast<std::int64_t>(g.size());
    largest = std::max(largest, size);
    if (size < m) continue;
    if (best && size > best->size) continue;
    const Rational rho = remoteness(g).value;
    if (!best || size < best->size || rho > *best_rho) {
      best = LambdaSelection{std::move(g), p, size};
      best_rho = rho;
    }
  }
  if (!best) {
    throw Infeasible("m = " + std::to_string(m) + " exceeds the family maximum " + std::to_string(largest));
  }
  return std::move(*best);
}

Digraph shortcut_free_dipath(int n, std::span<const Arc> back_arcs) {
  if (n < 1) throw InvalidInput("order must be positive");
  std::vector<Arc> arcs;
  for (Vertex v = 0; v + 1 < n; ++v) arcs.push_back({v, v + 1});
  for (const Arc& a : back_arcs) {
    if (a.tail <= a.head) {
      throw InvalidInput("(" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                         ") is not a backward arc; forward arcs would create shortcuts");
    }
    arcs.push_back(a);
  }
  Digraph d(n, std::move(arcs));
  if (!is_strong(d)) throw NotStrong("dipath with the given backward arcs is not strong");
  return d;
}

std::int64_t construction_size(const PathCompleteParams& p) {
  return static_cast<std::int64_t>(kappa_pc_digraph(p).size());
}

std::int64_t construction_size(const LambdaPCParams& p) {
  return static_cast<std::int64_t>(lambda_pc_graph(p).size());
}

std::int64_t construction_size(std::span<const int> block_sizes) {
  return static_cast<std::int64_t>(backward_sum(block_sizes).size());
}

std::int64_t prefix_size(int kappa, int ell) {
  std::vector<int> blocks{1};
  blocks.insert(blocks.end(), static_cast<std::size_t>(ell), kappa);
  return construction_size(blocks);
}

std::int64_t claimed_family_max(int n) { return std::int64_t{n} * n - 2 * n - 1; }

Rational claimed_family_min(int n, int kappa) {
  // b' in {1, ..., kappa} with b' = n - 1 (mod kappa).
  const int b = (n - 1) % kappa == 0 ? kappa : (n - 1) % kappa;
  return Rational(std::int64_t{n} * (3 * kappa + n), 2) - n - std::int64_t{kappa} * kappa -
         std::int64_t{b} * (kappa - b);
}

ClaimedSizes claimed_sizes(const PathCompleteParams& p) {
  p.validate();
  const std::int64_t k = p.kappa;
  const std::int64_t l = p.ell;
  const std::int64_t a = p.a;
  const std::int64_t b = p.b;
  ClaimedSizes c;
  c.prefix_size = Rational(l * k * k * (l + 3), 2) - k * (k - 1);
  c.m_star_expansion = c.prefix_size + (a + b) * (a + b - 1) + 2 * k * a + (a + b) * l * k - (k - 1) * a + b;
  c.source_transmission = Rational(k * l * (l + 1), 2) + (l + 1) * (a + b) + b;
  c.family_max = claimed_family_max(p.order());
  c.family_min = claimed_family_min(p.order(), p.kappa);
  return c;
}

}  // namespace dgr
