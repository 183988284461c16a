#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dgr/bounds.hpp"
#include "dgr/canonical.hpp"
#include "dgr/digraph.hpp"
#include "dgr/rational.hpp"

namespace dgr {

// Stored counterexamples per list; the counts keep the true totals.
inline constexpr std::size_t kMaxStoredCounterexamples = 32;

struct Counterexample {
  std::string kind;        // "bound", "whitney", "equality_characterization", ...
  std::string edge_list;   // edge-list serialization of the digraph
  CanonicalForm canonical;
  std::int64_t m = 0;
  Rational remoteness;
  std::optional<int> kappa;
  std::optional<int> lambda;
  std::optional<Rational> bound;
  std::optional<Rational> margin;  // remoteness - bound; > 0 for a bound violation
  std::string detail;

  friend bool operator<(const Counterexample& x, const Counterexample& y) {
    return std::tie(x.canonical, x.kind, x.edge_list, x.detail) < std::tie(y.canonical, y.kind, y.edge_list, y.detail);
  }
};

Counterexample make_counterexample(std::string kind, const Digraph& d, const Rational& remoteness);

struct AuditRecord {
  std::string label;
  std::string claimed;
  std::string computed;
  bool agrees = false;
};

// One (bound, m) cell of a sweep.
struct CellSummary {
  std::int64_t instances = 0;
  std::int64_t in_range = 0;
  std::int64_t violations = 0;
  std::int64_t equality = 0;
  std::optional<Rational> max_remoteness;
  std::optional<Rational> min_slack;  // bound - remoteness over in-range instances

  void merge(const CellSummary& other);
};

using CellKey = std::pair<std::string, std::int64_t>;  // (bound id, m)

struct CheckReport {
  std::string check_id;
  int order = 0;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::int64_t masks_scanned = 0;
  std::int64_t instances_examined = 0;
  std::int64_t out_of_range_instances = 0;

  std::int64_t violation_count = 0;
  std::vector<Counterexample> violations;
  // Raw formula exceeded outside the bound's stated range; reported apart.
  std::int64_t out_of_range_violation_count = 0;
  std::vector<Counterexample> out_of_range_violations;

  std::set<std::string> equality_witnesses;  // hex canonical forms
  std::vector<AuditRecord> audit_records;
  std::map<CellKey, CellSummary> cells;
  std::vector<std::string> notes;
  std::chrono::duration<double> elapsed{0};

  bool passed() const { return violation_count == 0; }
  void add_violation(Counterexample c);
  void add_out_of_range_violation(Counterexample c);
  void add_parameter(std::string key, std::string value);
  // Sorts stored counterexamples and trims them to the stored limit.
  void normalize();

  // Associative and commutative on everything except parameters, notes and
  // audit records, which are kept from *this and then appended.
  void merge(CheckReport&& other);
};

// Serializations. Elapsed time is left out unless asked for so that equal
// sweeps give byte-identical documents.
std::string to_json(const CheckReport& r, bool include_timing = false);
std::string to_text(const CheckReport& r, bool include_timing = false);
std::string to_csv(const CheckReport& r);

std::string to_json(const BoundResult& r);

}  // namespace dgr
