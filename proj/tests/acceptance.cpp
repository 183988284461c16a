// Acceptance criteria 1-9. One PASS/FAIL line per criterion; exit status 1
// if any fails. All comparisons are exact rationals; the runtime limits
// below are part of the criteria.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dgr/bounds.hpp"
#include "dgr/checks.hpp"
#include "dgr/connectivity.hpp"
#include "dgr/constructions.hpp"
#include "dgr/distance.hpp"
#include "dgr/report.hpp"
#include "oracles.hpp"

using namespace dgr;

namespace {

constexpr double kAnchorSeconds = 1.0;
constexpr double kOrder4Seconds = 5.0;
constexpr double kOrder5Seconds = 300.0;
constexpr double kMonotonicitySeconds = 60.0;
constexpr double kEulerianSeconds = 30.0;
constexpr int kGridPairs = 1000;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Ledger {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      outcome_.pass = false;
      failures_.push_back(what);
    }
  }
  void info(const std::string& s) { info_.push_back(s); }
  Outcome finish() {
    std::ostringstream out;
    for (std::size_t i = 0; i < info_.size(); ++i) out << (i ? "; " : "") << info_[i];
    for (const auto& f : failures_) out << "; FAILED " << f;
    outcome_.detail = out.str();
    return outcome_;
  }

 private:
  Outcome outcome_;
  std::vector<std::string> info_;
  std::vector<std::string> failures_;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string n_str(std::int64_t x) { return std::to_string(x); }

// Reports from criterion 3, reused by criterion 9.
std::vector<std::string> order5_reports;

Outcome anchors() {
  Ledger l;
  const auto start = std::chrono::steady_clock::now();
  for (int n = 3; n <= 12; ++n) {
    const auto k = complete_digraph(n);
    const auto c = directed_cycle(n);
    l.expect(remoteness(k).value == Rational(1), "rho(K_" + n_str(n) + ") = 1");
    l.expect(remoteness(c).value == Rational(n, 2), "rho(C_" + n_str(n) + ") = n/2");
    l.expect(oracle::remoteness(oracle::matrix_of(k)) == Rational(1), "oracle rho(K_" + n_str(n) + ")");
    l.expect(oracle::remoteness(oracle::matrix_of(c)) == Rational(n, 2), "oracle rho(C_" + n_str(n) + ")");
  }
  const double t = seconds_since(start);
  l.expect(t < kAnchorSeconds, "runtime");
  l.info("n = 3..12 exact");
  return l.finish();
}

Outcome order4() {
  Ledger l;
  const auto r = check_universal_bound({4, {}, BoundId::digraph_order, std::nullopt});
  l.expect(r.masks_scanned == 4096, "all 2^12 masks scanned");
  l.expect(r.violation_count == 0, "zero violations");
  l.expect(!r.equality_witnesses.empty(), "equality witnesses present");
  l.info(n_str(r.instances_examined) + " strong digraphs, " + n_str(r.violation_count) + " violations, " +
         n_str(static_cast<std::int64_t>(r.equality_witnesses.size())) +
         " equality classes all shortcut-free Hamiltonian");
  l.expect(r.elapsed.count() < kOrder4Seconds, "runtime");
  return l.finish();
}

Outcome order5() {
  Ledger l;
  double total = 0;
  for (BoundId id : {BoundId::digraph_order, BoundId::size_digraph}) {
    const auto r = check_universal_bound({5, {}, id, std::nullopt}, 1);
    l.expect(r.masks_scanned == (1 << 20), "all 2^20 masks scanned");
    l.expect(r.violation_count == 0, std::string(to_string(id)) + " zero violations");
    l.expect(r.out_of_range_violation_count == 0, std::string(to_string(id)) + " zero violations outside range");
    l.info(std::string(to_string(id)) + ": " + n_str(r.instances_examined) + " instances, " +
           n_str(r.violation_count) + " violations (" + n_str(r.out_of_range_instances) + " outside range, " +
           n_str(r.out_of_range_violation_count) + " violations there)");
    total += r.elapsed.count();
    order5_reports.push_back(to_json(r));
  }
  std::ostringstream t;
  t.precision(3);
  t << total;
  l.info(t.str() + " s single worker");
  l.expect(total < kOrder5Seconds, "runtime");
  return l.finish();
}

Outcome dpk_reproduction() {
  Ledger l;
  const PathCompleteParams p{2, 1, 2, 1};
  const auto d = kappa_pc_digraph(p);
  const auto adj = oracle::matrix_of(d);
  l.expect(d.order() == 6, "order 6");
  l.expect(d.size() == 25, "25 arcs");
  l.expect(vertex_connectivity(d).value == 2, "kappa = 2");
  l.expect(oracle::kappa(adj) == 2, "oracle kappa = 2");
  l.expect(distance_profile(d, 0).counts == std::vector<int>{1, 2, 2, 1}, "profile (1,2,2,1)");
  const auto fw = oracle::floyd_warshall(adj);
  l.expect(fw[0] == std::vector<int>{0, 1, 1, 2, 2, 3}, "oracle distances from v_0");
  l.expect(remoteness(d).value == Rational(9, 5), "rho = 9/5");
  l.expect(oracle::remoteness(adj) == Rational(9, 5), "oracle rho = 9/5");
  l.expect(m_star(6, 25, 2) == 25, "m*(6,25,2) = 25");
  const BoundQuery q{BoundId::kappa_digraph, 6, Rational(25), 2, std::nullopt};
  const Rational value = formula_value(q);
  l.expect(value == Rational(9, 5), "kappa_digraph bound = 9/5");
  l.expect(value == remoteness(d).value, "equality");
  const auto r = evaluate(q);
  l.info("bound " + to_string(value) + " = rho " + to_string(remoteness(d).value) +
         (r.applicable ? "" : " (m = 25 lies above the stated range m <= 23; value from the formula at m* = 25)"));
  return l.finish();
}

Outcome monotonicity() {
  Ledger l;
  const auto a = check_lemma_monotonicity(8, 3);
  const auto b = check_lemma_monotonicity(9, 3);
  l.expect(a.violation_count == 0, "n <= 8 zero violations");
  l.expect(b.violation_count == 0, "n <= 9 zero violations");
  std::string inserts;
  std::string pairs;
  for (const auto& [k, v] : b.parameters) {
    if (k == "insertions") inserts = v;
    if (k == "pairs") pairs = v;
  }
  l.info(n_str(b.instances_examined) + " members, " + inserts + " arc insertions, " + pairs +
         " pairs up to n = 9");
  l.expect(a.elapsed.count() + b.elapsed.count() < kMonotonicitySeconds, "runtime");
  return l.finish();
}

Outcome specialization() {
  Ledger l;
  int pairs = 0;
  int mismatches = 0;
  // n = 11..35, 40 sizes spread over each applicable range.
  for (int n = 11; n <= 35; ++n) {
    const std::int64_t graph_top = binomial2(n - 1);
    const std::int64_t digraph_top = claimed_family_max(n);
    for (int k = 0; k < 40; ++k) {
      ++pairs;
      const Rational mg(graph_top * k / 39);
      const auto kg = evaluate({BoundId::kappa_graph, n, mg, 1, std::nullopt});
      const auto os = evaluate({BoundId::order_size, n, mg, std::nullopt, std::nullopt});
      if (!kg.value || !os.value || *kg.value != *os.value) ++mismatches;
      const Rational md(digraph_top * k / 39);
      const auto kd = evaluate({BoundId::kappa_digraph, n, md, 1, std::nullopt});
      const auto sd = evaluate({BoundId::size_digraph, n, md, std::nullopt, std::nullopt});
      if (!kd.value || !sd.value || *kd.value != *sd.value) ++mismatches;
    }
  }
  l.expect(pairs == kGridPairs, "1000 grid pairs");
  l.expect(mismatches == 0, "zero mismatches");
  l.info(n_str(pairs) + " (n, m) pairs, both identities, " + n_str(mismatches) + " mismatches");
  return l.finish();
}

Outcome eulerian() {
  Ledger l;
  const auto theorem = check_eulerian_size_theorem(4);
  const auto corollary = check_universal_bound({4, {ClassKind::eulerian, 0}, BoundId::eulerian_size, std::nullopt});
  l.expect(theorem.instances_examined == 118, "118 Eulerian digraphs");
  l.expect(theorem.violation_count == 0, "size inequality and equality structure");
  l.expect(corollary.violation_count == 0, "eulerian_size bound");
  l.expect(corollary.out_of_range_violation_count == 0, "eulerian_size bound outside range");
  l.info(n_str(theorem.instances_examined) + " Eulerian digraphs, " +
         n_str(static_cast<std::int64_t>(theorem.equality_witnesses.size())) +
         " equality classes, all bidirected sequential sums; order-size bound with m_0 = m/2 holds");
  l.expect(theorem.elapsed.count() + corollary.elapsed.count() < kEulerianSeconds, "runtime");
  return l.finish();
}

Outcome audit() {
  Ledger l;
  int expansions = 0;
  std::ostringstream maxima;
  for (int kappa = 1; kappa <= 3; ++kappa) {
    for (int n = 5; n <= 9; ++n) {
      const auto r = audit_size_formulas(n, kappa);
      bool has_max = false;
      for (const auto& a : r.audit_records) {
        if (a.label == "family max size") {
          has_max = !a.claimed.empty() && !a.computed.empty();
          if (r.instances_examined > 0) maxima << " (" << n << "," << kappa << "):" << a.computed << "/" << a.claimed;
        }
        if (a.label.rfind("m* expansion", 0) == 0) {
          ++expansions;
          l.expect(a.agrees, a.label + " for n = " + n_str(n));
        }
      }
      l.expect(has_max, "family max recorded for n = " + n_str(n) + ", kappa = " + n_str(kappa));
    }
  }
  l.info(n_str(expansions) + " m* expansions agree; direct/stated max" + maxima.str());
  return l.finish();
}

Outcome determinism() {
  Ledger l;
  if (order5_reports.size() != 2) {
    l.expect(false, "criterion 3 reports available");
    return l.finish();
  }
  std::size_t i = 0;
  for (BoundId id : {BoundId::digraph_order, BoundId::size_digraph}) {
    for (int workers : {2, 4}) {
      const auto r = to_json(check_universal_bound({5, {}, id, std::nullopt}, workers));
      l.expect(r == order5_reports[i], std::string(to_string(id)) + " with " + n_str(workers) + " workers");
    }
    ++i;
  }
  l.info("1, 2 and 4 workers give byte-identical reports for both sweeps");
  return l.finish();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"trivial invariant anchors", anchors},
      {"order-4 digraph order sweep", order4},
      {"order-5 order and size sweeps", order5},
      {"DPK(2,1,2,1) reproduction", dpk_reproduction},
      {"lemma monotonicity suite", monotonicity},
      {"specialization identities", specialization},
      {"Eulerian suite", eulerian},
      {"formula audit", audit},
      {"determinism across workers", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %zu %s: %s [%.2f s] %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                seconds_since(start), o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
