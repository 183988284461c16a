#include "dgr/checks.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <vector>

#include "dgr/canonical.hpp"
#include "dgr/connectivity.hpp"
#include "dgr/constructions.hpp"
#include "dgr/distance.hpp"
#include "dgr/errors.hpp"
#include "dgr/sweep.hpp"

namespace dgr {

namespace {

using Clock = std::chrono::steady_clock;

bool is_graph_bound(BoundId id) {
  return id == BoundId::order || id == BoundId::order_size || id == BoundId::kappa_graph ||
         id == BoundId::lambda_graph;
}

std::string set_text(const std::set<std::int64_t>& s) {
  std::string out = "{";
  for (auto it = s.begin(); it != s.end(); ++it) {
    if (it != s.begin()) out += ",";
    out += std::to_string(*it);
  }
  return out + "}";
}

std::int64_t mod(std::int64_t x, std::int64_t k) { return ((x % k) + k) % k; }

// Bound results for every (arc count, parameter) a sweep can meet, so the
// per-digraph work is a lookup.
class BoundTable {
 public:
  BoundTable(BoundId bound, int n) : bound_(bound) {
    const int max_arcs = n * (n - 1);
    const int max_param = std::max(1, n - 1);
    for (int arcs = 0; arcs <= max_arcs; ++arcs) {
      const Rational m = is_graph_bound(bound) || is_eulerian_bound(bound) ? Rational(arcs, 2) : Rational(arcs);
      for (int param = 1; param <= max_param; ++param) {
        BoundQuery q{bound, n, std::nullopt, std::nullopt, std::nullopt};
        if (needs_size(bound)) q.m = m;
        if (needs_kappa(bound)) q.kappa = param;
        if (needs_lambda(bound)) {
          if (param < 2) continue;
          q.lambda = std::min(param, 3);
        }
        Entry e;
        e.result = evaluate(q);
        e.raw = e.result.value ? *e.result.value : formula_value(q);
        table_[{arcs, param}] = std::move(e);
        if (!needs_kappa(bound) && !needs_lambda(bound)) break;
      }
    }
  }

  struct Entry {
    BoundResult result;
    Rational raw;
  };

  const Entry& at(int arcs, int kappa, int lambda) const {
    int param = 1;
    if (needs_kappa(bound_)) param = kappa;
    if (needs_lambda(bound_)) param = lambda;
    return table_.at({arcs, param});
  }

 private:
  BoundId bound_;
  std::map<std::pair<int, int>, Entry> table_;
};

int order_floor(BoundId bound) { return bound == BoundId::digraph_order ? 3 : 2; }

}  // namespace

bool has_shortcut_free_hamiltonian_dipath(const Digraph& d) {
  const int n = d.order();
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i + 1 < n && ok; ++i) ok = d.has_arc(perm[i], perm[i + 1]);
    for (int i = 0; i < n && ok; ++i) {
      for (int j = i + 2; j < n && ok; ++j) ok = !d.has_arc(perm[i], perm[j]);
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

ClassFilter default_class(BoundId bound) {
  if (is_graph_bound(bound)) return {ClassKind::graph, 0};
  if (is_eulerian_bound(bound)) return {ClassKind::eulerian, 0};
  return {ClassKind::strong, 0};
}

CheckReport check_universal_bound(const UniversalCheck& check, int workers) {
  const auto start = Clock::now();
  const int n = check.order;
  const BoundId bound = check.bound;
  if (n < order_floor(bound)) {
    throw InvalidInput(std::string(to_string(bound)) + " needs order >= " + std::to_string(order_floor(bound)));
  }
  EnumerationSpec{n, check.filter, check.sampling}.validate();
  const BoundTable table(bound, n);
  const bool graph = is_graph_bound(bound);
  const bool eulerian = is_eulerian_bound(bound);
  const bool order_bound = bound == BoundId::order || bound == BoundId::digraph_order;
  const std::string name(to_string(bound));

  SweepPlan plan;
  plan.order = n;
  plan.sampling = check.sampling;
  plan.accept = [&](const Digraph&, const SweepFacts& f) {
    if (!admits(check.filter, f)) return false;
    if (graph && !f.symmetric) return false;
    if (eulerian && !f.balanced) return false;
    if (needs_lambda(bound) && f.lambda < 2) return false;
    return true;
  };
  plan.visit = [&](const Digraph& d, const SweepFacts& f, CheckReport& report) {
    const int arcs = static_cast<int>(d.size());
    const auto& entry = table.at(arcs, f.kappa, f.lambda);
    const std::int64_t m_key = graph ? arcs / 2 : arcs;
    auto& cell = report.cells[{name, m_key}];
    ++cell.instances;
    if (!cell.max_remoteness || *cell.max_remoteness < f.remoteness) cell.max_remoteness = f.remoteness;

    auto counterexample = [&](std::string kind, const Rational& value) {
      auto c = make_counterexample(std::move(kind), d, f.remoteness);
      if (needs_kappa(bound)) c.kappa = f.kappa;
      if (needs_lambda(bound)) c.lambda = f.lambda;
      c.bound = value;
      c.margin = f.remoteness - value;
      return c;
    };

    if (!entry.result.applicable) {
      ++report.out_of_range_instances;
      if (f.remoteness > entry.raw) {
        auto c = counterexample("bound_outside_range", entry.raw);
        c.detail = "outside range";
        for (const auto& note : entry.result.notes) {
          if (note.find(':') == std::string::npos) c.detail += " " + note;
        }
        report.add_out_of_range_violation(std::move(c));
      }
      return;
    }
    const Rational value = *entry.result.value;
    ++cell.in_range;
    const Rational slack = value - f.remoteness;
    if (!cell.min_slack || slack < *cell.min_slack) cell.min_slack = slack;
    if (f.remoteness > value) {
      ++cell.violations;
      report.add_violation(counterexample("bound", value));
    }
    const bool equal = f.remoteness == value;
    if (equal) {
      ++cell.equality;
      report.equality_witnesses.insert(to_hex(canonical_form(d)));
    }
    if (order_bound) {
      const bool structured = has_shortcut_free_hamiltonian_dipath(d);
      if (equal && !structured) report.add_violation(counterexample("equality_without_structure", value));
      if (!equal && structured) report.add_violation(counterexample("structure_without_equality", value));
    }
  };

  CheckReport report = run_sweep(plan, workers);
  report.check_id = "universal_bound";
  report.add_parameter("bound", name);
  report.add_parameter("n", std::to_string(n));
  report.add_parameter("class", check.filter.describe());
  if (graph) report.add_parameter("m", "edge count of the underlying graph");
  if (eulerian) report.add_parameter("m", "m_0 = arcs / 2");
  if (needs_lambda(bound)) report.add_parameter("lambda", "min(lambda(D), 3); lambda(D) < 2 skipped");
  if (needs_kappa(bound)) report.add_parameter("kappa", "kappa(D)");
  if (check.sampling) {
    report.add_parameter("mode", "sampled");
    report.add_parameter("samples", std::to_string(check.sampling->count));
    report.add_parameter("seed", std::to_string(check.sampling->seed));
    report.add_parameter("sampler", std::string(kSamplerName));
  } else {
    report.add_parameter("mode", "exhaustive");
  }
  report.elapsed = Clock::now() - start;
  return report;
}

CheckReport check_extremal_uniqueness(int n, std::int64_t m, int kappa, int workers) {
  const auto start = Clock::now();
  if (n > kExhaustiveCeiling) {
    throw Infeasible("extremal uniqueness is checked exhaustively only up to order " +
                     std::to_string(kExhaustiveCeiling));
  }
  if (n < 2 || kappa < 1) throw InvalidInput("need n >= 2 and kappa >= 1");
  const auto guard = sharpness_guard(BoundId::kappa_digraph, n, Rational(m), kappa);
  const bool congruent = std::find(guard.reasons.begin(), guard.reasons.end(), "congruence") == guard.reasons.end();
  bool member = false;
  for (const auto& p : path_complete_family(n, kappa)) member |= construction_size(p) == m;
  if (!congruent || !member) {
    throw InvalidInput("sharpness guard not met for n = " + std::to_string(n) + ", m = " + std::to_string(m) +
                       ", kappa = " + std::to_string(kappa) +
                       (congruent ? ": m is not the size of a family member" : ": congruence fails"));
  }

  const auto dpk = dpk_select(n, m, kappa);
  const Rational target = remoteness(dpk.object).value;
  const std::string target_form = to_hex(canonical_form(dpk.object));

  SweepPlan plan;
  plan.order = n;
  plan.accept = [&](const Digraph& d, const SweepFacts& f) {
    return f.kappa >= kappa && static_cast<std::int64_t>(d.size()) >= m;
  };
  plan.visit = [&](const Digraph& d, const SweepFacts& f, CheckReport& report) {
    auto& cell = report.cells[{"dpk_remoteness", static_cast<std::int64_t>(d.size())}];
    ++cell.instances;
    ++cell.in_range;
    if (!cell.max_remoteness || *cell.max_remoteness < f.remoteness) cell.max_remoteness = f.remoteness;
    const Rational slack = target - f.remoteness;
    if (!cell.min_slack || slack < *cell.min_slack) cell.min_slack = slack;
    if (f.remoteness < target) return;
    auto c = make_counterexample("", d, f.remoteness);
    c.kappa = f.kappa;
    c.bound = target;
    c.margin = f.remoteness - target;
    if (f.remoteness > target) {
      ++cell.violations;
      c.kind = "exceeds_extremal";
      report.add_violation(std::move(c));
      return;
    }
    ++cell.equality;
    const std::string form = to_hex(c.canonical);
    report.equality_witnesses.insert(form);
    if (form != target_form) {
      c.kind = "additional_extremal_form";
      report.add_violation(std::move(c));
    }
  };

  CheckReport report = run_sweep(plan, workers);
  report.check_id = "extremal_uniqueness";
  report.add_parameter("n", std::to_string(n));
  report.add_parameter("m", std::to_string(m));
  report.add_parameter("kappa", std::to_string(kappa));
  report.add_parameter("dpk", dpk.params.describe());
  report.add_parameter("dpk_size", std::to_string(dpk.size));
  report.add_parameter("dpk_canonical", target_form);
  report.add_parameter("dpk_remoteness", to_string(target));

  BoundQuery q{BoundId::kappa_digraph, n, Rational(m), kappa, std::nullopt};
  report.audit_records.push_back(
      {"kappa_digraph bound vs remoteness of DPK", to_string(formula_value(q)), to_string(target),
       formula_value(q) == target});
  if (guard.audit_flagged) report.notes.push_back(guard.audit_note);
  report.elapsed = Clock::now() - start;
  return report;
}

CheckReport check_lemma_monotonicity(int n_max, int kappa_max) {
  const auto start = Clock::now();
  if (n_max > kMonotonicityCeiling) {
    throw Infeasible("monotonicity is checked up to order " + std::to_string(kMonotonicityCeiling));
  }
  if (kappa_max < 1) throw InvalidInput("kappa_max must be positive");
  CheckReport report;
  report.check_id = "lemma_monotonicity";
  report.order = n_max;
  report.add_parameter("n_max", std::to_string(n_max));
  report.add_parameter("kappa_max", std::to_string(kappa_max));

  std::int64_t insertions = 0;
  std::int64_t pairs = 0;
  for (int kappa = 1; kappa <= kappa_max; ++kappa) {
    for (int n = 3; n <= n_max; ++n) {
      const auto family = path_complete_family(n, kappa);
      if (family.empty()) continue;
      struct Member {
        Digraph d;
        Rational rho;
      };
      std::vector<Member> members;
      for (const auto& p : family) {
        Digraph h = kappa_pc_digraph(p);
        const Rational rho = remoteness(h).value;
        ++report.instances_examined;
        for (Vertex u = 0; u < n; ++u) {
          for (Vertex v = 0; v < n; ++v) {
            if (u == v || h.has_arc(u, v)) continue;
            ++insertions;
            const Rational after = remoteness(with_arc(h, {u, v})).value;
            if (after >= rho) {
              auto c = make_counterexample("insertion_not_decreasing", h, rho);
              c.kappa = kappa;
              c.detail = p.describe() + " + (" + std::to_string(u) + "," + std::to_string(v) + ") gives " +
                         to_string(after);
              report.add_violation(std::move(c));
            }
          }
        }
        members.push_back({std::move(h), rho});
      }
      std::int64_t local_pairs = 0;
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
          ++local_pairs;
          const auto mi = static_cast<std::int64_t>(members[i].d.size());
          const auto mj = static_cast<std::int64_t>(members[j].d.size());
          const bool reversed = (mi < mj && members[i].rho > members[j].rho) ||
                                (mi > mj && members[i].rho < members[j].rho);
          if (mi == mj || !reversed) {
            auto c = make_counterexample(mi == mj ? "equal_sizes" : "order_not_reversed", members[i].d, members[i].rho);
            c.kappa = kappa;
            c.detail = family[i].describe() + " vs " + family[j].describe() + " (m " + std::to_string(mj) +
                       ", rho " + to_string(members[j].rho) + ")";
            report.add_violation(std::move(c));
          }
        }
      }
      pairs += local_pairs;
      report.notes.push_back("n=" + std::to_string(n) + " kappa=" + std::to_string(kappa) + ": " +
                             std::to_string(members.size()) + " members, " + std::to_string(local_pairs) +
                             " pairs");
    }
  }
  report.add_parameter("insertions", std::to_string(insertions));
  report.add_parameter("pairs", std::to_string(pairs));
  report.normalize();
  report.elapsed = Clock::now() - start;
  return report;
}

CheckReport check_eulerian_size_theorem(int n, int workers) {
  const auto start = Clock::now();
  if (n > kExhaustiveCeiling) {
    throw Infeasible("the Eulerian size check is exhaustive only up to order " + std::to_string(kExhaustiveCeiling));
  }
  SweepPlan plan;
  plan.order = n;
  plan.accept = [](const Digraph&, const SweepFacts& f) { return f.balanced; };
  plan.visit = [](const Digraph& d, const SweepFacts& f, CheckReport& report) {
    const auto arcs = static_cast<std::int64_t>(d.size());
    auto& cell = report.cells[{"eulerian_size_theorem", arcs}];
    ++cell.instances;
    std::vector<DistanceProfile> profiles;
    int diam = 0;
    for (Vertex v = 0; v < d.order(); ++v) {
      profiles.push_back(distance_profile(d, v));
      diam = std::max(diam, profiles.back().eccentricity());
    }
    for (const auto& profile : profiles) {
      if (profile.eccentricity() != diam) continue;
      ++cell.in_range;
      const auto limit = 2 * static_cast<std::int64_t>(sequential_sum_graph(profile.counts).size());
      const Rational slack(limit - arcs);
      if (!cell.min_slack || slack < *cell.min_slack) cell.min_slack = slack;
      auto describe = [&] {
        std::string s = "vertex " + std::to_string(profile.source) + ", profile (";
        for (std::size_t i = 0; i < profile.counts.size(); ++i) {
          s += (i ? "," : "") + std::to_string(profile.counts[i]);
        }
        return s + "), bound " + std::to_string(limit);
      };
      if (arcs > limit) {
        ++cell.violations;
        auto c = make_counterexample("eulerian_size", d, f.remoteness);
        c.detail = describe();
        report.add_violation(std::move(c));
      } else if (arcs == limit) {
        ++cell.equality;
        const auto form = canonical_form(d);
        report.equality_witnesses.insert(to_hex(form));
        if (form != canonical_form(profile_digraph(profile.counts))) {
          auto c = make_counterexample("equality_not_profile_digraph", d, f.remoteness);
          c.detail = describe();
          report.add_violation(std::move(c));
        }
      }
    }
  };
  CheckReport report = run_sweep(plan, workers);
  report.check_id = "eulerian_size_theorem";
  report.add_parameter("n", std::to_string(n));
  report.add_parameter("mode", "exhaustive");
  report.elapsed = Clock::now() - start;
  return report;
}

CheckReport audit_size_formulas(int n, int kappa) {
  const auto start = Clock::now();
  if (n > kAuditCeiling) throw Infeasible("the size audit runs up to order " + std::to_string(kAuditCeiling));
  if (n < 2 || kappa < 1) throw InvalidInput("need n >= 2 and kappa >= 1");
  CheckReport report;
  report.check_id = "audit_size_formulas";
  report.order = n;
  report.add_parameter("n", std::to_string(n));
  report.add_parameter("kappa", std::to_string(kappa));

  const auto family = path_complete_family(n, kappa);
  const std::int64_t claimed_max = claimed_family_max(n);
  const Rational claimed_min = claimed_family_min(n, kappa);
  if (family.empty()) {
    report.notes.push_back("empty family: needs n >= 2*kappa + 2");
    report.audit_records.push_back({"family max size", std::to_string(claimed_max), "empty family", false});
    report.audit_records.push_back({"family min size", to_string(claimed_min), "empty family", false});
    report.elapsed = Clock::now() - start;
    return report;
  }

  std::int64_t max_size = 0;
  std::int64_t min_size = 0;
  std::set<std::int64_t> residues;
  for (const auto& p : family) {
    ++report.instances_examined;
    const Digraph h = kappa_pc_digraph(p);
    const auto size = static_cast<std::int64_t>(h.size());
    const auto claimed = claimed_sizes(p);
    const std::string tag = p.describe();
    report.audit_records.push_back({"m* expansion " + tag, to_string(claimed.m_star_expansion), std::to_string(size),
                                    claimed.m_star_expansion == Rational(size)});
    const auto prefix = prefix_size(kappa, p.ell);
    report.audit_records.push_back(
        {"prefix size " + tag, to_string(claimed.prefix_size), std::to_string(prefix), claimed.prefix_size == Rational(prefix)});
    const auto sigma = transmission(h, 0);
    report.audit_records.push_back({"sigma(v_0) " + tag, to_string(claimed.source_transmission),
                                    std::to_string(sigma), claimed.source_transmission == Rational(sigma)});
    max_size = report.instances_examined == 1 ? size : std::max(max_size, size);
    min_size = report.instances_examined == 1 ? size : std::min(min_size, size);
    residues.insert(mod(size, kappa));
  }
  report.audit_records.push_back(
      {"family max size", std::to_string(claimed_max), std::to_string(max_size), claimed_max == max_size});
  report.audit_records.push_back(
      {"family min size", to_string(claimed_min), std::to_string(min_size), claimed_min == Rational(min_size)});
  const std::set<std::int64_t> claimed_class{mod(claimed_max, kappa)};
  report.audit_records.push_back(
      {"size residues mod kappa", set_text(claimed_class), set_text(residues), claimed_class == residues});
  report.elapsed = Clock::now() - start;
  return report;
}

}  // namespace dgr
