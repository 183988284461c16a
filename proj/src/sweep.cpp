#include "dgr/sweep.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <vector>

#include "dgr/connectivity.hpp"
#include "dgr/distance.hpp"
#include "dgr/errors.hpp"

namespace dgr {

namespace {

constexpr int kPrefixBits = 8;
constexpr std::size_t kSampleShards = 64;

bool is_balanced(const Digraph& d) {
  for (Vertex v = 0; v < d.order(); ++v) {
    if (d.in_degree(v) != d.out_degree(v)) return false;
  }
  return true;
}

bool is_symmetric(const Digraph& d) {
  for (const Arc& a : d.arcs()) {
    if (!d.has_arc(a.head, a.tail)) return false;
  }
  return true;
}

void core_consistency(const Digraph& d, const SweepFacts& f, CheckReport& report) {
  if (!(f.kappa <= f.lambda && f.lambda <= f.min_semidegree)) {
    auto c = make_counterexample("whitney", d, f.remoteness);
    c.kappa = f.kappa;
    c.lambda = f.lambda;
    c.detail = "min semidegree " + std::to_string(f.min_semidegree);
    report.add_violation(std::move(c));
  }
  const int n = d.order();
  bool consistent = remoteness(d).value == f.remoteness;
  for (Vertex v = 0; v < n && consistent; ++v) {
    consistent = transmission(d, v) == f.transmissions[v] &&
                 avg_distance(d, v) == Rational(f.transmissions[v], n - 1);
  }
  if (!consistent) report.add_violation(make_counterexample("transmission_consistency", d, f.remoteness));
}

void visit_mask(const SweepPlan& plan, std::uint64_t mask, CheckReport& report) {
  ++report.masks_scanned;
  const Digraph d = digraph_from_mask(plan.order, mask);
  const auto sigma = try_all_transmissions(d);
  if (!sigma) return;
  SweepFacts f;
  f.transmissions = *sigma;
  const auto best = std::max_element(sigma->begin(), sigma->end());
  f.remoteness = Rational(*best, plan.order - 1);
  f.witness = static_cast<Vertex>(best - sigma->begin());
  f.kappa = vertex_connectivity(d).value;
  f.lambda = edge_connectivity(d).value;
  f.min_semidegree = min_semidegree(d);
  f.balanced = is_balanced(d);
  f.symmetric = is_symmetric(d);
  core_consistency(d, f, report);
  if (!plan.accept(d, f)) return;
  ++report.instances_examined;
  plan.visit(d, f, report);
}

void check_plan(const SweepPlan& plan) {
  if (plan.order < 2) throw InvalidInput("sweeps need order >= 2");
  EnumerationSpec{plan.order, {}, plan.sampling}.validate();
  if (!plan.accept || !plan.visit) throw InvalidInput("sweep plan is missing a callback");
}

}  // namespace

bool admits(const ClassFilter& filter, const SweepFacts& f) {
  switch (filter.kind) {
    case ClassKind::strong: return true;
    case ClassKind::strong_kappa: return f.kappa >= filter.param;
    case ClassKind::eulerian: return f.balanced;
    case ClassKind::eulerian_kappa: return f.balanced && f.kappa >= filter.param;
    case ClassKind::eulerian_lambda: return f.balanced && f.lambda >= filter.param;
    case ClassKind::graph: return f.symmetric;
  }
  return false;
}

int default_workers() {
  if (const char* env = std::getenv("DGR_WORKERS")) {
    try {
      const int w = std::stoi(env);
      if (w > 0) return w;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

namespace detail {

CheckReport sweep_serial(const SweepPlan& plan) {
  check_plan(plan);
  CheckReport report;
  report.order = plan.order;
  if (plan.sampling) {
    for (auto mask : sampled_masks(plan.order, *plan.sampling)) visit_mask(plan, mask, report);
  } else {
    const std::uint64_t total = std::uint64_t{1} << arc_cells(plan.order);
    for (std::uint64_t mask = 0; mask < total; ++mask) visit_mask(plan, mask, report);
  }
  report.normalize();
  return report;
}

CheckReport sweep_parallel(const SweepPlan& plan, int workers) {
  check_plan(plan);
  // Shards: ranges of masks sharing their top bits (exhaustive), or
  // contiguous runs of draws (sampled). Merged in shard order.
  std::vector<std::uint64_t> draws;
  std::uint64_t total = 0;
  std::size_t shards = 0;
  int low_bits = 0;
  if (plan.sampling) {
    draws = sampled_masks(plan.order, *plan.sampling);
    total = draws.size();
    shards = std::min<std::size_t>(kSampleShards, std::max<std::size_t>(1, draws.size()));
  } else {
    const int cells = arc_cells(plan.order);
    low_bits = std::max(0, cells - kPrefixBits);
    total = std::uint64_t{1} << cells;
    shards = static_cast<std::size_t>(total >> low_bits);
  }

  std::vector<CheckReport> partial(shards);
  std::vector<std::exception_ptr> errors(shards);
  const auto count = static_cast<std::int64_t>(shards);
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (std::int64_t s = 0; s < count; ++s) {
    try {
      if (plan.sampling) {
        const std::uint64_t begin = total * s / shards;
        const std::uint64_t end = total * (s + 1) / shards;
        for (std::uint64_t i = begin; i < end; ++i) visit_mask(plan, draws[i], partial[s]);
      } else {
        const std::uint64_t begin = static_cast<std::uint64_t>(s) << low_bits;
        const std::uint64_t end = static_cast<std::uint64_t>(s + 1) << low_bits;
        for (std::uint64_t mask = begin; mask < end; ++mask) visit_mask(plan, mask, partial[s]);
      }
    } catch (...) {
      errors[s] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  CheckReport report;
  report.order = plan.order;
  for (auto& p : partial) report.merge(std::move(p));
  report.normalize();
  return report;
}

}  // namespace detail

CheckReport run_sweep(const SweepPlan& plan, int workers) {
  return workers <= 1 ? detail::sweep_serial(plan) : detail::sweep_parallel(plan, workers);
}

}  // namespace dgr
