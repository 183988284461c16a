#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>

#include "dgr/digraph.hpp"
#include "dgr/enumerate.hpp"
#include "dgr/rational.hpp"
#include "dgr/report.hpp"

namespace dgr {

// Invariants computed once per strong digraph of a sweep.
struct SweepFacts {
  std::span<const std::int64_t> transmissions;
  Rational remoteness;
  Vertex witness = 0;
  int kappa = 0;
  int lambda = 0;
  int min_semidegree = 0;
  bool balanced = false;
  bool symmetric = false;
};

bool admits(const ClassFilter& filter, const SweepFacts& facts);

// A sweep visits every strong digraph of the given order (all arc masks, or
// the sampled ones), keeps those accepted, and lets visit record into a
// partial report. Every strong digraph is also checked for the Whitney chain
// kappa <= lambda <= min semidegree and for agreement between the sweep's
// transmissions and the core distance functions; failures are violations.
struct SweepPlan {
  int order = 0;
  std::optional<Sampling> sampling;
  std::function<bool(const Digraph&, const SweepFacts&)> accept;
  std::function<void(const Digraph&, const SweepFacts&, CheckReport&)> visit;
};

// DGR_WORKERS if set to a positive integer, else 1.
int default_workers();

// workers <= 1 runs the serial reference kernel. Results do not depend on
// the worker count. The returned report carries counts, counterexamples,
// witnesses and cells; callers fill in check id and parameters.
CheckReport run_sweep(const SweepPlan& plan, int workers);

namespace detail {
CheckReport sweep_serial(const SweepPlan& plan);
CheckReport sweep_parallel(const SweepPlan& plan, int workers);
}  // namespace detail

}  // namespace dgr
