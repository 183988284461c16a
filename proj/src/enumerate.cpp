#include "dgr/enumerate.hpp"

#include <charconv>
#include <random>

#include "dgr/connectivity.hpp"
#include "dgr/distance.hpp"
#include "dgr/errors.hpp"

namespace dgr {

namespace {

struct KindName {
  ClassKind kind;
  std::string_view name;
  bool has_param;
};

constexpr KindName kKinds[] = {
    {ClassKind::strong, "strong", false},
    {ClassKind::strong_kappa, "strong_kappa", true},
    {ClassKind::eulerian, "eulerian", false},
    {ClassKind::eulerian_kappa, "eulerian_kappa", true},
    {ClassKind::eulerian_lambda, "eulerian_lambda", true},
    {ClassKind::graph, "graph", false},
};

bool balanced(const Digraph& d) {
  for (Vertex v = 0; v < d.order(); ++v) {
    if (d.in_degree(v) != d.out_degree(v)) return false;
  }
  return true;
}

bool symmetric(const Digraph& d) {
  for (const Arc& a : d.arcs()) {
    if (!d.has_arc(a.head, a.tail)) return false;
  }
  return true;
}

bool kappa_at_least(const Digraph& d, int k) {
  if (k <= 1) return true;
  if (d.order() < 2 || min_semidegree(d) < k) return false;
  return vertex_connectivity(d).value >= k;
}

bool lambda_at_least(const Digraph& d, int k) {
  if (k <= 1) return true;
  if (d.order() < 2 || min_semidegree(d) < k) return false;
  return edge_connectivity(d).value >= k;
}

}  // namespace

bool ClassFilter::accepts_strong(const Digraph& d) const {
  switch (kind) {
    case ClassKind::strong: return true;
    case ClassKind::strong_kappa: return kappa_at_least(d, param);
    case ClassKind::eulerian: return balanced(d);
    case ClassKind::eulerian_kappa: return balanced(d) && kappa_at_least(d, param);
    case ClassKind::eulerian_lambda: return balanced(d) && lambda_at_least(d, param);
    case ClassKind::graph: return symmetric(d);
  }
  return false;
}

bool ClassFilter::accepts(const Digraph& d) const { return is_strong(d) && accepts_strong(d); }

std::string ClassFilter::describe() const {
  for (const auto& k : kKinds) {
    if (k.kind == kind) {
      return k.has_param ? std::string(k.name) + "(" + std::to_string(param) + ")" : std::string(k.name);
    }
  }
  return "?";
}

ClassFilter ClassFilter::parse(std::string_view text) {
  std::string_view name = text;
  std::optional<int> param;
  if (auto open = text.find_first_of("(:"); open != std::string_view::npos) {
    name = text.substr(0, open);
    auto rest = text.substr(open + 1);
    if (!rest.empty() && rest.back() == ')') rest.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
    if (ec != std::errc{} || ptr != rest.data() + rest.size()) {
      throw InvalidInput("bad class parameter in '" + std::string(text) + "'");
    }
    param = value;
  }
  for (const auto& k : kKinds) {
    if (k.name != name) continue;
    if (k.has_param != param.has_value()) {
      throw InvalidInput("class '" + std::string(name) + (k.has_param ? "' needs" : "' takes no") + " parameter");
    }
    return {k.kind, param.value_or(0)};
  }
  throw InvalidInput("unknown class '" + std::string(text) + "'");
}

void EnumerationSpec::validate() const {
  if (order < 1) throw InvalidInput("order must be positive");
  if (!sampling && order > kExhaustiveCeiling) {
    throw Infeasible("exhaustive enumeration is limited to order " + std::to_string(kExhaustiveCeiling) +
                     "; use sampled mode");
  }
  if (sampling && order > kSampledCeiling) {
    throw Infeasible("sampled enumeration is limited to order " + std::to_string(kSampledCeiling));
  }
}

int arc_cells(int n) { return n * (n - 1); }

Arc cell_arc(int n, int k) {
  const int row = k / (n - 1);
  const int col = k % (n - 1);
  return {row, col >= row ? col + 1 : col};
}

Digraph digraph_from_mask(int n, std::uint64_t mask) {
  std::uint64_t rows[8] = {};
  if (n > 8) throw InvalidInput("mask digraphs are limited to order 8");
  for (int k = 0; mask != 0; ++k, mask >>= 1) {
    if (mask & 1U) {
      const Arc a = cell_arc(n, k);
      rows[a.tail] |= std::uint64_t{1} << a.head;
    }
  }
  return Digraph::from_out_masks(std::span<const std::uint64_t>(rows, static_cast<std::size_t>(n)));
}

std::uint64_t arc_mask(const Digraph& d) {
  const int n = d.order();
  if (n > 8) throw InvalidInput("mask digraphs are limited to order 8");
  std::uint64_t mask = 0;
  for (const Arc& a : d.arcs()) {
    const int k = a.tail * (n - 1) + (a.head > a.tail ? a.head - 1 : a.head);
    mask |= std::uint64_t{1} << k;
  }
  return mask;
}

std::vector<std::uint64_t> sampled_masks(int n, const Sampling& s) {
  std::mt19937_64 rng(s.seed);
  const int cells = arc_cells(n);
  const std::uint64_t keep = cells >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << cells) - 1;
  std::vector<std::uint64_t> masks(s.count);
  for (auto& m : masks) m = rng() & keep;
  return masks;
}

void for_each_digraph(const EnumerationSpec& spec, const std::function<void(const Digraph&)>& visit) {
  spec.validate();
  const int n = spec.order;
  auto consider = [&](std::uint64_t mask) {
    const Digraph d = digraph_from_mask(n, mask);
    if (spec.filter.accepts(d)) visit(d);
  };
  if (spec.sampling) {
    for (auto mask : sampled_masks(n, *spec.sampling)) consider(mask);
  } else {
    const std::uint64_t total = std::uint64_t{1} << arc_cells(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) consider(mask);
  }
}

std::vector<Digraph> enumerate_digraphs(const EnumerationSpec& spec) {
  std::vector<Digraph> out;
  for_each_digraph(spec, [&](const Digraph& d) { out.push_back(d); });
  return out;
}

}  // namespace dgr
