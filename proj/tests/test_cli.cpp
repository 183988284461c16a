#include <gtest/gtest.h>

#include <sstream>

#include "dgr/cli.hpp"
#include "dgr/connectivity.hpp"
#include "dgr/distance.hpp"
#include "dgr/io.hpp"
#include "json.hpp"

using namespace dgr;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

// Metadata lines "# key: value" of an edge list.
std::map<std::string, std::string> meta_of(const std::string& text) {
  std::map<std::string, std::string> meta;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    if (line.rfind("# ", 0) != 0) continue;
    const auto colon = line.find(": ");
    meta[line.substr(2, colon - 2)] = line.substr(colon + 2);
  }
  return meta;
}

}  // namespace

TEST(Cli, ComputeRemoteness) {
  const auto r = run({"compute", "--input", "-", "--invariant", "remoteness"}, "5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "5/2 (= 2.5) at vertex 0\n");
}

TEST(Cli, ComputeOtherInvariants) {
  const std::string dpk = run({"generate", "dpk", "--kappa", "2", "--ell", "1", "--a", "2", "--b", "1"}).out;
  EXPECT_EQ(run({"compute", "--input", "-", "--invariant", "profile", "--vertex", "0"}, dpk).out, "0: (1,2,2,1)\n");
  EXPECT_EQ(run({"compute", "--input", "-", "--invariant", "diam"}, dpk).out, "3\n");
  EXPECT_EQ(run({"compute", "--input", "-", "--invariant", "eulerian"}, dpk).out, "no\n");
  EXPECT_EQ(run({"compute", "--input", "-", "--invariant", "sigma", "--vertex", "0"}, dpk).out,
            "0: 9 (average 9/5 (= 1.8))\n");
  EXPECT_EQ(run({"compute", "--input", "-", "--invariant", "kappa"}, dpk).out.substr(0, 1), "2");
  const auto json = nlohmann::json::parse(run({"compute", "--input", "-", "--invariant", "rho", "--format", "json"}, dpk).out);
  EXPECT_EQ(json["value"]["numerator"], 9);
  EXPECT_EQ(json["value"]["denominator"], 5);
  const auto graph = run({"compute", "--input", "-", "--invariant", "rho", "--graph"}, "4\n0 1\n1 2\n2 3\n3 0\n");
  EXPECT_EQ(graph.out, "4/3 (= 1.333333333) at vertex 0\n");
}

TEST(Cli, ComputeErrors) {
  EXPECT_EQ(run({"compute", "--input", "-", "--invariant", "remoteness"}, "3\n0 1\n1 2\n").code, cli::input_error);
  EXPECT_EQ(run({"compute", "--input", "-", "--invariant", "remoteness"}, "3\n0 7\n").code, cli::input_error);
  EXPECT_EQ(run({"compute", "--input", "/nonexistent/file", "--invariant", "rho"}).code, cli::input_error);
  EXPECT_EQ(run({"compute", "--input", "-", "--invariant", "girth"}, "2\n0 1\n1 0\n").code, cli::input_error);
  EXPECT_EQ(run({"compute", "--invariant", "rho"}).code, cli::usage_error);
  EXPECT_EQ(run({"compute", "--input", "-", "--invariant", "rho", "--bogus"}).code, cli::usage_error);
  EXPECT_EQ(run({}).code, cli::usage_error);
}

TEST(Cli, GenerateDpk) {
  const auto r = run({"generate", "dpk", "--n", "6", "--m", "20", "--kappa", "2", "--format", "edges"});
  EXPECT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string first;
  std::getline(lines, first);
  EXPECT_EQ(first, "6");
  int arcs = 0;
  for (std::string line; std::getline(lines, line);) arcs += !line.empty() && line[0] != '#';
  EXPECT_EQ(arcs, 25);
  EXPECT_EQ(run({"generate", "dpk", "--n", "6", "--m", "26", "--kappa", "2"}).code, cli::input_error);
  EXPECT_EQ(run({"generate", "dpk", "--n", "6", "--m", "20"}).code, cli::input_error);
  EXPECT_EQ(run({"generate", "hypercube", "--n", "3"}).code, cli::usage_error);
}

// Generated metadata must be reproduced by compute on the emitted edge list.
TEST(Cli, GenerateComputeRoundTrip) {
  const std::vector<std::vector<std::string>> invocations{
      {"generate", "dpk", "--n", "8", "--m", "30", "--kappa", "2", "--meta"},
      {"generate", "dpk", "--kappa", "1", "--ell", "2", "--a", "1", "--b", "1", "--meta"},
      {"generate", "pk", "--kappa", "2", "--ell", "1", "--a", "2", "--b", "1", "--meta"},
      {"generate", "pklambda", "--lambda", "3", "--k", "1", "--a", "3", "--variant", "C", "--meta"},
      {"generate", "pklambda", "--n", "9", "--m", "0", "--lambda", "2", "--meta"},
      {"generate", "cycle", "--n", "7", "--meta"},
      {"generate", "complete", "--n", "5", "--meta"},
      {"generate", "profile", "--blocks", "1,2,3,1", "--meta"},
  };
  for (const auto& args : invocations) {
    const auto gen = run(args);
    ASSERT_EQ(gen.code, 0) << gen.err;
    const auto meta = meta_of(gen.out);
    const bool graph = meta.at("kind") == "graph";
    std::vector<std::string> base{"compute", "--input", "-", "--format", "json"};
    if (graph) base.push_back("--graph");
    auto value = [&](const std::string& invariant) {
      auto a = base;
      a.insert(a.end(), {"--invariant", invariant});
      const auto r = run(a, gen.out);
      EXPECT_EQ(r.code, 0) << r.err;
      return nlohmann::json::parse(r.out);
    };
    const auto rho = value("remoteness");
    EXPECT_EQ(rho["value"]["text"], meta.at("remoteness"));
    EXPECT_EQ(std::to_string(rho["vertex"].get<int>()), meta.at("remoteness_vertex"));
    EXPECT_EQ(std::to_string(value("kappa")["value"].get<int>()), meta.at("kappa"));
    EXPECT_EQ(std::to_string(value("lambda")["value"].get<int>()), meta.at("lambda"));
    EXPECT_EQ(std::to_string(rho["order"].get<int>()), meta.at("order"));
    const auto size = rho["size"].get<std::size_t>();
    EXPECT_EQ(std::to_string(graph ? size / 2 : size), meta.at("size"));
  }
}

TEST(Cli, GenerateFormats) {
  const auto dot = run({"generate", "cycle", "--n", "3", "--format", "dot"});
  EXPECT_NE(dot.out.find("digraph"), std::string::npos);
  const auto json = nlohmann::json::parse(run({"generate", "profile", "--blocks", "1,2,1", "--format", "json"}).out);
  EXPECT_EQ(json["size"], 10);
  EXPECT_EQ(json["arcs"].size(), 10U);
  EXPECT_EQ(run({"generate", "profile", "--blocks", "1,x"}).code, cli::input_error);
  EXPECT_EQ(run({"generate", "pklambda", "--lambda", "2", "--k", "1", "--a", "3", "--variant", "C"}).code,
            cli::input_error);
}

TEST(Cli, Bound) {
  const auto r = run({"bound", "--bound", "size_digraph", "--n", "5", "--m", "10"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "7/2 (= 3.5)");
  const auto j = nlohmann::json::parse(
      run({"bound", "--bound", "kappa_digraph", "--n", "6", "--m", "23", "--kappa", "2", "--format", "json"}).out);
  EXPECT_EQ(j["m_star"], 23);
  EXPECT_EQ(j["applicable"], true);
  EXPECT_EQ(j["value"]["text"], "2");
  EXPECT_EQ(run({"bound", "--bound", "kappa_digraph", "--n", "6", "--m", "23"}).code, cli::input_error);
  EXPECT_EQ(run({"bound", "--bound", "nope", "--n", "6", "--m", "23"}).code, cli::input_error);
  const auto half = run({"bound", "--bound", "eulerian_size", "--n", "5", "--m", "5/2"});
  EXPECT_EQ(half.out.substr(0, half.out.find('\n')), "23/8 (= 2.875)");
}

TEST(Cli, VerifyAndAudit) {
  const auto ok = run({"verify", "--check", "digraph_order", "--order", "4", "--format", "json"});
  EXPECT_EQ(ok.code, 0);
  const auto report = nlohmann::json::parse(ok.out);
  EXPECT_EQ(report["check_id"], "universal_bound");
  EXPECT_EQ(report["instances"], 1606);
  EXPECT_EQ(report["violations"].size(), 0U);
  const auto w2 = run({"verify", "--check", "digraph_order", "--order", "4", "--format", "json", "--workers", "2"});
  EXPECT_EQ(w2.out, ok.out);
  const auto csv = run({"verify", "--check", "size_digraph", "--order", "4", "--format", "csv"});
  EXPECT_EQ(csv.code, 0);
  EXPECT_NE(csv.out.find("4,12,size_digraph,"), std::string::npos);
  EXPECT_EQ(run({"verify", "--check", "size_digraph", "--order", "6"}).code, cli::input_error);
  EXPECT_EQ(run({"verify", "--check", "size_digraph", "--order", "6", "--samples", "100"}).code, cli::input_error);
  EXPECT_EQ(run({"verify", "--check", "size_digraph", "--order", "6", "--samples", "300", "--seed", "5"}).code, 0);
  EXPECT_EQ(run({"verify", "--check", "extremal_uniqueness", "--order", "4", "--m", "9", "--kappa", "1"}).code, 0);
  EXPECT_EQ(run({"verify", "--check", "extremal_uniqueness", "--order", "5", "--m", "14", "--kappa", "2"}).code,
            cli::input_error);
  EXPECT_EQ(run({"verify", "--check", "lemma_monotonicity", "--order", "7", "--kappa", "2"}).code, 0);
  EXPECT_EQ(run({"verify", "--check", "eulerian_size_theorem", "--order", "3"}).code, 0);
  EXPECT_EQ(run({"verify", "--check", "kappa_graph", "--order", "4", "--class", "graph"}).code, 0);
  EXPECT_EQ(run({"verify", "--check", "size_digraph", "--order", "4", "--workers", "0"}).code, cli::usage_error);

  const auto audit = run({"audit", "--n", "6", "--kappa", "2", "--format", "json"});
  EXPECT_EQ(audit.code, 0);
  const auto doc = nlohmann::json::parse(audit.out);
  bool found = false;
  for (const auto& rec : doc["audit"]) {
    if (rec["label"] == "family max size") {
      found = true;
      EXPECT_EQ(rec["claimed"], "23");
      EXPECT_EQ(rec["computed"], "25");
    }
  }
  EXPECT_TRUE(found);
}
