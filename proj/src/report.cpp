#include "dgr/report.hpp"

#include <algorithm>
#include <sstream>

#include "dgr/io.hpp"
#include "json.hpp"

namespace dgr {

namespace {

using nlohmann::ordered_json;

ordered_json rational_json(const Rational& r) {
  return ordered_json{{"numerator", r.numerator()}, {"denominator", r.denominator()}, {"text", to_string(r)}};
}

template <class T>
ordered_json optional_json(const std::optional<T>& x) {
  if (!x) return nullptr;
  if constexpr (std::is_same_v<T, Rational>) {
    return rational_json(*x);
  } else {
    return *x;
  }
}

ordered_json counterexample_json(const Counterexample& c) {
  return ordered_json{
      {"kind", c.kind},
      {"canonical", to_hex(c.canonical)},
      {"m", c.m},
      {"remoteness", rational_json(c.remoteness)},
      {"kappa", optional_json(c.kappa)},
      {"lambda", optional_json(c.lambda)},
      {"bound", optional_json(c.bound)},
      {"margin", optional_json(c.margin)},
      {"detail", c.detail},
      {"digraph", c.edge_list},
  };
}

void keep_smallest(std::vector<Counterexample>& list) {
  std::sort(list.begin(), list.end());
  if (list.size() > kMaxStoredCounterexamples) list.resize(kMaxStoredCounterexamples);
}

std::optional<Rational> merged_max(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::max(*a, *b);
}

std::optional<Rational> merged_min(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

std::string opt_text(const std::optional<Rational>& r) { return r ? to_string(*r) : ""; }

void write_counterexample(std::ostream& out, const Counterexample& c) {
  out << "  [" << c.kind << "] canonical " << to_hex(c.canonical) << ", m = " << c.m
      << ", remoteness = " << fraction_and_decimal(c.remoteness);
  if (c.kappa) out << ", kappa = " << *c.kappa;
  if (c.lambda) out << ", lambda = " << *c.lambda;
  if (c.bound) out << ", bound = " << fraction_and_decimal(*c.bound);
  if (c.margin) out << ", margin = " << to_string(*c.margin);
  if (!c.detail.empty()) out << ", " << c.detail;
  out << "\n";
  std::istringstream lines(c.edge_list);
  for (std::string line; std::getline(lines, line);) out << "    " << line << "\n";
}

}  // namespace

Counterexample make_counterexample(std::string kind, const Digraph& d, const Rational& remoteness) {
  Counterexample c;
  c.kind = std::move(kind);
  c.edge_list = to_edge_list(d);
  if (d.order() <= kCanonicalCeiling) c.canonical = canonical_form(d);
  c.m = d.size();
  c.remoteness = remoteness;
  return c;
}

void CellSummary::merge(const CellSummary& other) {
  instances += other.instances;
  in_range += other.in_range;
  violations += other.violations;
  equality += other.equality;
  max_remoteness = merged_max(max_remoteness, other.max_remoteness);
  min_slack = merged_min(min_slack, other.min_slack);
}

void CheckReport::add_violation(Counterexample c) {
  ++violation_count;
  violations.push_back(std::move(c));
  if (violations.size() > 2 * kMaxStoredCounterexamples) keep_smallest(violations);
}

void CheckReport::add_out_of_range_violation(Counterexample c) {
  ++out_of_range_violation_count;
  out_of_range_violations.push_back(std::move(c));
  if (out_of_range_violations.size() > 2 * kMaxStoredCounterexamples) keep_smallest(out_of_range_violations);
}

void CheckReport::add_parameter(std::string key, std::string value) {
  parameters.emplace_back(std::move(key), std::move(value));
}

void CheckReport::normalize() {
  keep_smallest(violations);
  keep_smallest(out_of_range_violations);
}

void CheckReport::merge(CheckReport&& other) {
  if (check_id.empty()) check_id = std::move(other.check_id);
  if (order == 0) order = other.order;
  masks_scanned += other.masks_scanned;
  instances_examined += other.instances_examined;
  out_of_range_instances += other.out_of_range_instances;
  violation_count += other.violation_count;
  out_of_range_violation_count += other.out_of_range_violation_count;
  std::move(other.violations.begin(), other.violations.end(), std::back_inserter(violations));
  std::move(other.out_of_range_violations.begin(), other.out_of_range_violations.end(),
            std::back_inserter(out_of_range_violations));
  normalize();
  equality_witnesses.merge(other.equality_witnesses);
  for (auto& [key, cell] : other.cells) cells[key].merge(cell);
  std::move(other.audit_records.begin(), other.audit_records.end(), std::back_inserter(audit_records));
  std::move(other.notes.begin(), other.notes.end(), std::back_inserter(notes));
  elapsed += other.elapsed;
}

std::string to_json(const CheckReport& r, bool include_timing) {
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;

  auto sorted = [](std::vector<Counterexample> list) {
    std::sort(list.begin(), list.end());
    ordered_json out = ordered_json::array();
    for (const auto& c : list) out.push_back(counterexample_json(c));
    return out;
  };

  ordered_json audit = ordered_json::array();
  for (const auto& a : r.audit_records) {
    audit.push_back({{"label", a.label}, {"claimed", a.claimed}, {"computed", a.computed}, {"agrees", a.agrees}});
  }
  ordered_json cells = ordered_json::array();
  for (const auto& [key, c] : r.cells) {
    cells.push_back({{"bound", key.first},
                     {"m", key.second},
                     {"instances", c.instances},
                     {"in_range", c.in_range},
                     {"violations", c.violations},
                     {"equality", c.equality},
                     {"max_remoteness", optional_json(c.max_remoteness)},
                     {"min_slack", optional_json(c.min_slack)}});
  }

  ordered_json doc{
      {"check_id", r.check_id},
      {"order", r.order},
      {"parameters", params},
      {"masks_scanned", r.masks_scanned},
      {"instances", r.instances_examined},
      {"out_of_range_instances", r.out_of_range_instances},
      {"passed", r.passed()},
      {"violation_count", r.violation_count},
      {"violations", sorted(r.violations)},
      {"out_of_range_violation_count", r.out_of_range_violation_count},
      {"out_of_range_violations", sorted(r.out_of_range_violations)},
      {"equality_witnesses", r.equality_witnesses},
      {"audit", audit},
      {"cells", cells},
      {"notes", r.notes},
  };
  if (include_timing) doc["elapsed_seconds"] = r.elapsed.count();
  return doc.dump(2) + "\n";
}

std::string to_text(const CheckReport& r, bool include_timing) {
  std::ostringstream out;
  out << "check " << r.check_id << " (order " << r.order << ")\n";
  for (const auto& [k, v] : r.parameters) out << "  " << k << ": " << v << "\n";
  out << "masks scanned: " << r.masks_scanned << "\n";
  out << "instances: " << r.instances_examined << "\n";
  out << "outside stated range: " << r.out_of_range_instances << "\n";
  out << "violations: " << r.violation_count << "\n";
  std::vector<Counterexample> v = r.violations;
  std::sort(v.begin(), v.end());
  for (const auto& c : v) write_counterexample(out, c);
  out << "violations outside stated range: " << r.out_of_range_violation_count << "\n";
  v = r.out_of_range_violations;
  std::sort(v.begin(), v.end());
  for (const auto& c : v) write_counterexample(out, c);
  out << "equality witnesses (up to isomorphism): " << r.equality_witnesses.size() << "\n";
  for (const auto& w : r.equality_witnesses) out << "  " << w << "\n";
  if (!r.audit_records.empty()) {
    out << "audit:\n";
    for (const auto& a : r.audit_records) {
      out << "  " << a.label << ": claimed " << a.claimed << ", computed " << a.computed
          << (a.agrees ? "" : "  MISMATCH") << "\n";
    }
  }
  for (const auto& note : r.notes) out << "note: " << note << "\n";
  if (include_timing) out << "elapsed: " << r.elapsed.count() << " s\n";
  out << (r.passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string to_csv(const CheckReport& r) {
  std::ostringstream out;
  out << "n,m,bound,instances,in_range,violations,equality,max_remoteness,min_slack\n";
  for (const auto& [key, c] : r.cells) {
    out << r.order << ',' << key.second << ',' << key.first << ',' << c.instances << ',' << c.in_range << ','
        << c.violations << ',' << c.equality << ',' << opt_text(c.max_remoteness) << ',' << opt_text(c.min_slack)
        << "\n";
  }
  return out.str();
}

std::string to_json(const BoundResult& r) {
  ordered_json query{{"bound", std::string(to_string(r.query.bound))},
                     {"n", r.query.n},
                     {"m", optional_json(r.query.m)},
                     {"kappa", optional_json(r.query.kappa)},
                     {"lambda", optional_json(r.query.lambda)}};
  ordered_json doc{
      {"query", query},
      {"applicable", r.applicable},
      {"value", optional_json(r.value)},
      {"sharpness_conditions_met", r.sharpness_conditions_met},
      {"m_star", optional_json(r.m_star)},
      {"notes", r.notes},
  };
  if (r.value) doc["decimal"] = to_double(*r.value);
  return doc.dump(2) + "\n";
}

}  // namespace dgr
