#include "dgr/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "dgr/bounds.hpp"
#include "dgr/checks.hpp"
#include "dgr/connectivity.hpp"
#include "dgr/constructions.hpp"
#include "dgr/distance.hpp"
#include "dgr/errors.hpp"
#include "dgr/io.hpp"
#include "dgr/report.hpp"
#include "dgr/sweep.hpp"
#include "json.hpp"

namespace dgr::cli {

namespace {

using nlohmann::ordered_json;

ordered_json rational_json(const Rational& r) {
  return {{"numerator", r.numerator()}, {"denominator", r.denominator()}, {"text", to_string(r)},
          {"decimal", to_double(r)}};
}

std::string profile_text(const DistanceProfile& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.counts.size(); ++i) s += (i ? "," : "") + std::to_string(p.counts[i]);
  return s + ")";
}

std::vector<int> parse_blocks(const std::string& text) {
  std::vector<int> blocks;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      blocks.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidInput("bad block size '" + item + "'");
    }
  }
  if (blocks.empty()) throw InvalidInput("no blocks given");
  return blocks;
}

// ---- compute ----

struct ComputeOptions {
  std::string input;
  std::string invariant;
  std::optional<int> vertex;
  bool graph = false;
  std::string format = "text";
};

Digraph read_input(const ComputeOptions& o, std::istream& in) {
  auto read = [&](std::istream& s) { return o.graph ? bidirect(read_graph(s)) : read_digraph(s); };
  if (o.input == "-") return read(in);
  std::ifstream file(o.input);
  if (!file) throw InvalidInput("cannot open '" + o.input + "'");
  return read(file);
}

int compute(const ComputeOptions& o, std::istream& in, std::ostream& out) {
  const Digraph d = read_input(o, in);
  const std::string& inv = o.invariant;
  const bool json = o.format == "json";
  ordered_json doc{{"invariant", inv}, {"order", d.order()}, {"size", d.size()}};
  auto vertices = [&] {
    std::vector<Vertex> vs;
    if (o.vertex) {
      if (!d.contains(*o.vertex)) throw InvalidInput("vertex " + std::to_string(*o.vertex) + " out of range");
      vs.push_back(*o.vertex);
    } else {
      for (Vertex v = 0; v < d.order(); ++v) vs.push_back(v);
    }
    return vs;
  };

  if (inv == "remoteness" || inv == "rho") {
    const auto r = remoteness(d);
    doc["value"] = rational_json(r.value);
    doc["vertex"] = r.witness;
    if (!json) out << fraction_and_decimal(r.value) << " at vertex " << r.witness << "\n";
  } else if (inv == "transmission" || inv == "sigma" || inv == "average") {
    ordered_json rows = ordered_json::array();
    for (Vertex v : vertices()) {
      const auto s = transmission(d, v);
      const Rational avg = avg_distance(d, v);
      rows.push_back({{"vertex", v}, {"transmission", s}, {"average", rational_json(avg)}});
      if (!json) out << v << ": " << s << " (average " << fraction_and_decimal(avg) << ")\n";
    }
    doc["values"] = rows;
  } else if (inv == "ecc" || inv == "eccentricity") {
    ordered_json rows = ordered_json::array();
    for (Vertex v : vertices()) {
      const int e = eccentricity(d, v);
      rows.push_back({{"vertex", v}, {"eccentricity", e}});
      if (!json) out << v << ": " << e << "\n";
    }
    doc["values"] = rows;
  } else if (inv == "diam" || inv == "diameter") {
    const int diam = diameter(d);
    doc["value"] = diam;
    if (!json) out << diam << "\n";
  } else if (inv == "profile") {
    ordered_json rows = ordered_json::array();
    for (Vertex v : vertices()) {
      const auto p = distance_profile(d, v);
      rows.push_back({{"vertex", v}, {"profile", p.counts}});
      if (!json) out << v << ": " << profile_text(p) << "\n";
    }
    doc["values"] = rows;
  } else if (inv == "kappa") {
    const auto k = vertex_connectivity(d);
    doc["value"] = k.value;
    ordered_json cut = ordered_json::array();
    for (Vertex v : k.witness_cut) cut.push_back(v);
    doc["cut"] = cut;
    if (!json) {
      out << k.value;
      if (!k.witness_cut.empty()) {
        out << " (cut";
        for (Vertex v : k.witness_cut) out << " " << v;
        out << ")";
      }
      out << "\n";
    }
  } else if (inv == "lambda") {
    const auto l = edge_connectivity(d);
    doc["value"] = l.value;
    ordered_json cut = ordered_json::array();
    for (const Arc& a : l.witness_cut) cut.push_back({a.tail, a.head});
    doc["cut"] = cut;
    if (!json) {
      out << l.value << " (cut";
      for (const Arc& a : l.witness_cut) out << " " << a.tail << "->" << a.head;
      out << ")\n";
    }
  } else if (inv == "eulerian") {
    const bool e = is_eulerian(d);
    doc["value"] = e;
    if (!json) out << (e ? "yes" : "no") << "\n";
  } else {
    throw InvalidInput("unknown invariant '" + inv + "'");
  }
  if (json) out << doc.dump(2) << "\n";
  return ok;
}

// ---- generate ----

struct GenerateOptions {
  std::string kind;
  std::optional<int> n, kappa, lambda, ell, a, b, k;
  std::optional<std::int64_t> m;
  std::string variant = "A";
  std::string blocks;
  std::string format = "edges";
  bool meta = false;
  bool relaxed = false;
};

struct Generated {
  std::optional<Digraph> digraph;
  std::optional<Graph> graph;
  std::vector<std::pair<std::string, std::string>> meta;
};

int need(const std::optional<int>& x, const char* flag) {
  if (!x) throw InvalidInput(std::string("missing --") + flag);
  return *x;
}

Generated build(const GenerateOptions& o) {
  Generated g;
  const std::string& kind = o.kind;
  if (kind == "dpk" || kind == "pk") {
    PathCompleteParams p;
    if (o.m) {
      const int n = need(o.n, "n");
      const int kappa = need(o.kappa, "kappa");
      if (kind == "dpk") {
        auto s = dpk_select(n, *o.m, kappa);
        p = s.params;
        g.digraph = std::move(s.object);
      } else {
        auto s = pk_select(n, *o.m, kappa);
        p = s.params;
        g.graph = std::move(s.object);
      }
    } else {
      p = {need(o.kappa, "kappa"), need(o.ell, "ell"), need(o.a, "a"), need(o.b, "b"), o.relaxed};
      if (kind == "dpk") {
        g.digraph = kappa_pc_digraph(p);
      } else {
        g.graph = pc_graph(p);
      }
      if (o.n && *o.n != p.order()) throw InvalidInput("--n disagrees with the parameters");
    }
    g.meta.emplace_back("params", p.describe());
  } else if (kind == "pklambda") {
    LambdaPCParams p;
    if (o.m) {
      auto s = pk_lambda_select(need(o.n, "n"), *o.m, need(o.lambda, "lambda"));
      p = s.params;
      g.graph = std::move(s.object);
    } else {
      p = {need(o.lambda, "lambda"), need(o.k, "k"), need(o.a, "a"), o.b.value_or(1), parse_variant(o.variant)};
      g.graph = lambda_pc_graph(p);
    }
    g.meta.emplace_back("params", p.describe());
  } else if (kind == "cycle") {
    g.digraph = directed_cycle(need(o.n, "n"));
  } else if (kind == "complete") {
    g.digraph = complete_digraph(need(o.n, "n"));
  } else if (kind == "profile") {
    const auto blocks = parse_blocks(o.blocks);
    g.digraph = profile_digraph(blocks);
    g.meta.emplace_back("blocks", o.blocks);
  } else {
    throw InvalidInput("unknown construction '" + kind + "'");
  }
  return g;
}

int generate(const GenerateOptions& o, std::ostream& out) {
  Generated g = build(o);
  const Digraph d = g.digraph ? *g.digraph : bidirect(*g.graph);
  const bool is_graph = g.graph.has_value();
  std::vector<std::pair<std::string, std::string>> meta = g.meta;
  meta.insert(meta.begin(), {"kind", is_graph ? "graph" : "digraph"});
  if (o.meta) {
    meta.emplace_back("order", std::to_string(d.order()));
    meta.emplace_back("size", std::to_string(is_graph ? g.graph->size() : d.size()));
    if (d.order() >= 2) {
      const auto r = remoteness(d);
      meta.emplace_back("remoteness", to_string(r.value));
      meta.emplace_back("remoteness_vertex", std::to_string(r.witness));
      meta.emplace_back("kappa", std::to_string(vertex_connectivity(d).value));
      meta.emplace_back("lambda", std::to_string(edge_connectivity(d).value));
    }
  }

  if (o.format == "edges") {
    std::vector<std::string> comments;
    if (o.meta || is_graph) {
      for (const auto& [k, v] : meta) comments.push_back(k + ": " + v);
    }
    if (is_graph) {
      write_edge_list(out, *g.graph, comments);
    } else {
      write_edge_list(out, d, comments);
    }
  } else if (o.format == "dot") {
    if (is_graph) {
      write_dot(out, *g.graph);
    } else {
      write_dot(out, d);
    }
  } else if (o.format == "json") {
    ordered_json doc{{"order", d.order()}};
    ordered_json pairs = ordered_json::array();
    if (is_graph) {
      doc["size"] = g.graph->size();
      for (const Edge& e : g.graph->edges()) pairs.push_back({e.u, e.v});
      doc["edges"] = pairs;
    } else {
      doc["size"] = d.size();
      for (const Arc& a : d.arcs()) pairs.push_back({a.tail, a.head});
      doc["arcs"] = pairs;
    }
    ordered_json m = ordered_json::object();
    for (const auto& [k, v] : meta) m[k] = v;
    doc["meta"] = m;
    out << doc.dump(2) << "\n";
  } else {
    throw InvalidInput("unknown format '" + o.format + "'");
  }
  return ok;
}

// ---- bound ----

struct BoundOptions {
  std::string bound;
  int n = 0;
  std::optional<std::string> m;
  std::optional<int> kappa, lambda;
  std::string format = "text";
};

int bound(const BoundOptions& o, std::ostream& out) {
  BoundQuery q;
  q.bound = parse_bound_id(o.bound);
  q.n = o.n;
  if (o.m) q.m = parse_rational(*o.m);
  q.kappa = o.kappa;
  q.lambda = o.lambda;
  const BoundResult r = evaluate(q);
  if (o.format == "json") {
    out << to_json(r);
    return ok;
  }
  if (o.format != "text") throw InvalidInput("unknown format '" + o.format + "'");
  if (r.value) {
    out << fraction_and_decimal(*r.value) << "\n";
  } else {
    out << "not applicable\n";
  }
  if (r.m_star) out << "m*: " << *r.m_star << "\n";
  out << "sharpness conditions: " << (r.sharpness_conditions_met ? "met" : "not met") << "\n";
  for (const auto& note : r.notes) out << "note: " << note << "\n";
  return ok;
}

// ---- verify / audit ----

struct VerifyOptions {
  std::string check;
  int order = 0;
  std::optional<std::string> filter;
  std::optional<std::uint64_t> seed, samples;
  std::optional<std::int64_t> m;
  std::optional<int> kappa;
  int workers = 1;
  std::string format = "text";
  std::string output;
  bool timing = false;
};

void emit(const CheckReport& r, const std::string& format, bool timing, const std::string& path, std::ostream& out) {
  std::string doc;
  if (format == "json") {
    doc = to_json(r, timing);
  } else if (format == "text") {
    doc = to_text(r, timing);
  } else if (format == "csv") {
    doc = to_csv(r);
  } else {
    throw InvalidInput("unknown format '" + format + "'");
  }
  if (path.empty()) {
    out << doc;
    return;
  }
  std::ofstream file(path);
  if (!file) throw InvalidInput("cannot write '" + path + "'");
  file << doc;
}

int verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  if (o.samples.has_value() != o.seed.has_value()) throw InvalidInput("sampled mode needs both --samples and --seed");
  CheckReport report;
  if (o.check == "extremal_uniqueness") {
    if (!o.m || !o.kappa) throw InvalidInput("extremal_uniqueness needs --m and --kappa");
    report = check_extremal_uniqueness(o.order, *o.m, *o.kappa, o.workers);
  } else if (o.check == "lemma_monotonicity") {
    report = check_lemma_monotonicity(o.order, o.kappa.value_or(3));
  } else if (o.check == "eulerian_size_theorem") {
    report = check_eulerian_size_theorem(o.order, o.workers);
  } else {
    UniversalCheck c;
    c.bound = parse_bound_id(o.check);
    c.order = o.order;
    c.filter = o.filter ? ClassFilter::parse(*o.filter) : default_class(c.bound);
    if (o.samples) c.sampling = Sampling{*o.samples, *o.seed};
    report = check_universal_bound(c, o.workers);
  }
  emit(report, o.format, o.timing, o.output, out);
  if (o.timing) err << "elapsed: " << report.elapsed.count() << " s\n";
  return report.passed() ? ok : violation_found;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distance invariants, extremal constructions and remoteness bounds for strong digraphs", "dgr"};
  app.require_subcommand(1);

  ComputeOptions compute_opts;
  auto* c = app.add_subcommand("compute", "Invariants of a digraph read from an edge list");
  c->add_option("--input", compute_opts.input, "Edge-list file, or - for stdin")->required();
  c->add_option("--invariant", compute_opts.invariant,
                "remoteness|rho|transmission|sigma|ecc|diam|profile|kappa|lambda|eulerian")
      ->required();
  c->add_option("--vertex", compute_opts.vertex, "Restrict per-vertex invariants to one vertex");
  c->add_flag("--graph", compute_opts.graph, "Read undirected edges and take the bidirected lift");
  c->add_option("--format", compute_opts.format, "text|json")->check(CLI::IsMember({"text", "json"}));

  GenerateOptions gen_opts;
  auto* g = app.add_subcommand("generate", "Write a construction");
  g->add_option("kind", gen_opts.kind, "dpk|pk|pklambda|cycle|complete|profile")
      ->required()
      ->check(CLI::IsMember({"dpk", "pk", "pklambda", "cycle", "complete", "profile"}));
  g->add_option("--n", gen_opts.n);
  g->add_option("--m", gen_opts.m);
  g->add_option("--kappa", gen_opts.kappa);
  g->add_option("--lambda", gen_opts.lambda);
  g->add_option("--ell", gen_opts.ell);
  g->add_option("--a", gen_opts.a);
  g->add_option("--b", gen_opts.b);
  g->add_option("--k", gen_opts.k);
  g->add_option("--variant", gen_opts.variant, "A|B|C");
  g->add_option("--blocks", gen_opts.blocks, "Comma-separated block sizes for profile");
  g->add_option("--format", gen_opts.format, "edges|dot|json")->check(CLI::IsMember({"edges", "dot", "json"}));
  g->add_flag("--meta", gen_opts.meta, "Add order, size, remoteness and connectivity as metadata");
  g->add_flag("--relaxed-ell", gen_opts.relaxed, "Allow ell = 0");

  BoundOptions bound_opts;
  auto* b = app.add_subcommand("bound", "Evaluate a remoteness upper bound");
  b->add_option("--bound", bound_opts.bound)->required();
  b->add_option("--n", bound_opts.n)->required();
  b->add_option("--m", bound_opts.m, "Size (m_0 for Eulerian bounds); fractions allowed");
  b->add_option("--kappa", bound_opts.kappa);
  b->add_option("--lambda", bound_opts.lambda);
  b->add_option("--format", bound_opts.format, "text|json")->check(CLI::IsMember({"text", "json"}));

  VerifyOptions verify_opts;
  verify_opts.workers = default_workers();
  auto* v = app.add_subcommand("verify", "Run a verification sweep");
  v->add_option("--check", verify_opts.check,
                "A bound id, or extremal_uniqueness|lemma_monotonicity|eulerian_size_theorem")
      ->required();
  v->add_option("--order", verify_opts.order, "Order (n_max for lemma_monotonicity)")->required();
  v->add_option("--class", verify_opts.filter, "strong|strong_kappa(K)|eulerian|eulerian_kappa(K)|eulerian_lambda(L)|graph");
  v->add_option("--seed", verify_opts.seed);
  v->add_option("--samples", verify_opts.samples);
  v->add_option("--m", verify_opts.m);
  v->add_option("--kappa", verify_opts.kappa, "kappa, or kappa_max for lemma_monotonicity");
  v->add_option("--workers", verify_opts.workers, "Worker threads (default DGR_WORKERS or 1)")
      ->check(CLI::PositiveNumber);
  v->add_option("--format", verify_opts.format, "text|json|csv")->check(CLI::IsMember({"text", "json", "csv"}));
  v->add_option("--output", verify_opts.output, "Write the report here instead of stdout");
  v->add_flag("--timing", verify_opts.timing, "Include elapsed time");

  int audit_n = 0;
  int audit_kappa = 1;
  std::string audit_format = "text";
  auto* a = app.add_subcommand("audit", "Compare stated size formulas with direct counts");
  a->add_option("--n", audit_n)->required();
  a->add_option("--kappa", audit_kappa)->required();
  a->add_option("--format", audit_format, "text|json")->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    if (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front()) {
      err << sub->help();
    } else {
      err << app.help();
    }
    return usage_error;
  }

  try {
    if (*c) return compute(compute_opts, in, out);
    if (*g) return generate(gen_opts, out);
    if (*b) return bound(bound_opts, out);
    if (*v) return verify(verify_opts, out, err);
    if (*a) {
      const auto report = audit_size_formulas(audit_n, audit_kappa);
      out << (audit_format == "json" ? to_json(report) : to_text(report));
      return ok;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  }
  return usage_error;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cin, std::cout, std::cerr);
}

}  // namespace dgr::cli
