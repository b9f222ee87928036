#include <doctest.h>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "anumber/toric.hpp"
#include "cli.hpp"

using namespace anumber;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  int code = cli::main_entry(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("invariants of P_6") {
  auto r = invoke({"invariants", "--gen", "path:6"});
  CHECK(r.code == 0);
  CHECK(r.out == "sa=-5\na=[1,5,9,5]\nb=0\n");
}

TEST_CASE("invariants as JSON") {
  auto r = invoke({"invariants", "--gen", "path:6", "--output", "json"});
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["sa"] == "-5");
  CHECK(doc["a_vector"] == nlohmann::json::array({"1", "5", "9", "5"}));
  CHECK(doc["b"] == "0");
  CHECK(doc["graph"] == encode_graph6(generate(GraphFamily::path, 6)));
}

TEST_CASE("input sources") {
  CHECK(invoke({"invariants", "--graph6", "C~"}).out == invoke({"invariants", "--gen", "complete:4"}).out);
  CHECK(invoke({"invariants", "--stdin"}, "C~\n").out == invoke({"invariants", "--gen", "complete:4"}).out);
  const std::string path = "cli_test_edges.txt";
  {
    std::ofstream file(path);
    file << "4\n0 1\n1 2\n2 3\n";
  }
  CHECK(invoke({"invariants", "--edges", path}).out == invoke({"invariants", "--gen", "path:4"}).out);
  std::remove(path.c_str());
}

TEST_CASE("exit code 2 on malformed or missing input") {
  CHECK(invoke({"invariants", "--graph6", "C"}).code == 2);
  CHECK(invoke({"invariants", "--gen", "wheel:4"}).code == 2);
  CHECK(invoke({"invariants", "--gen", "cycle:2"}).code == 2);
  CHECK(invoke({"invariants"}).code == 2);
  CHECK(invoke({"invariants", "--gen", "path:3", "--graph6", "C~"}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"betti", "--gen", "path:4", "--method", "guess"}).code == 2);
  CHECK(invoke({"complex", "--gen", "path:3", "--which", "even"}).code == 2);
  CHECK(invoke({"complex", "--gen", "path:4", "--which", "T=9"}).code == 2);
  CHECK(invoke({"invariants", "--gen", "path:4", "--dp-cap", "0"}).code == 2);
  CHECK(invoke({"invariants", "--edges", "/nonexistent/edges.txt"}).code == 2);
}

TEST_CASE("exit code 3 on resource caps") {
  CHECK(invoke({"invariants", "--gen", "path:22"}).code == 3);
  CHECK(invoke({"invariants", "--gen", "path:9", "--dp-cap", "8"}).code == 3);
  CHECK(invoke({"betti", "--gen", "path:8", "--method", "homology_T"}).code == 3);
  CHECK(invoke({"betti", "--gen", "path:5", "--method", "S", "--homology-cap", "4"}).code == 3);
  CHECK(invoke({"betti", "--gen", "path:8", "--method", "T", "--homology-cap", "8"}).code == 0);
}

TEST_CASE("caps can come from the environment") {
  setenv("ANUMBER_DP_CAP", "5", 1);
  CHECK(invoke({"invariants", "--gen", "path:6"}).code == 3);
  CHECK(invoke({"invariants", "--gen", "path:6", "--dp-cap", "6"}).code == 0);
  unsetenv("ANUMBER_DP_CAP");
  setenv("ANUMBER_HOMOLOGY_CAP", "3", 1);
  CHECK(invoke({"betti", "--gen", "path:4", "--method", "T"}).code == 3);
  unsetenv("ANUMBER_HOMOLOGY_CAP");
}

TEST_CASE("betti output") {
  auto r = invoke({"betti", "--gen", "cycle:5", "--method", "homology_S"});
  CHECK(r.code == 0);
  CHECK(r.out == "homology_S: betti=[1,5,10] euler=6\n");
  auto j = invoke({"betti", "--gen", "cycle:5", "--method", "T", "--output", "json"});
  REQUIRE(j.code == 0);
  auto report = report_from_json(j.out);
  CHECK(report.method == BettiMethod::homology_T);
  CHECK(report.betti == std::vector<BigInt>{1, 5, 10});
  CHECK(report.graph == generate(GraphFamily::cycle, 5));
}

TEST_CASE("complex output") {
  auto r = invoke({"complex", "--gen", "path:4", "--which", "even"});
  CHECK(r.code == 0);
  CHECK(r.out == "dimension=0 vertices=3 facets=3\n{0,1}\n{1,2}\n{2,3}\n");
  auto j = invoke({"complex", "--gen", "path:3", "--output", "json"});
  REQUIRE(j.code == 0);
  auto complex = complex_from_json(j.out);
  CHECK(complex.facets().size() == 5);
  CHECK(invoke({"complex", "--gen", "cycle:4", "--which", "T=0,1"}).code == 0);
  CHECK(invoke({"complex", "--gen", "cycle:4", "--which", "Tpp=0,1"}).code == 0);
  CHECK(invoke({"complex", "--gen", "cycle:4", "--which", "poset"}).code == 0);
  CHECK(invoke({"complex", "--gen", "cycle:4", "--which", "odd"}).code == 0);
}

TEST_CASE("hvector output") {
  auto r = invoke({"hvector", "--gen", "complete:4"});
  CHECK(r.code == 0);
  CHECK(r.out == "f=[1,14,36,24]\nh=[1,11,11,1]\n");
  auto j = nlohmann::json::parse(invoke({"hvector", "--gen", "path:3", "--output", "json"}).out);
  CHECK(j["h"] == nlohmann::json::array({1, 3, 1}));
}

TEST_CASE("table output is deterministic and complete") {
  auto first = invoke({"table", "--family", "star", "--max-n", "8"});
  auto second = invoke({"table", "--family", "star", "--max-n", "8"});
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  CHECK(first.out.find("n=8: 1 7 70 336 272\n") != std::string::npos);
  auto j = nlohmann::json::parse(invoke({"table", "--family", "path", "--max-n", "3", "--output", "json"}).out);
  CHECK(j["family"] == "path");
  CHECK(j["rows"].size() == 4);
  CHECK(invoke({"table", "--family", "wheel", "--max-n", "3"}).code == 2);
  CHECK(invoke({"table", "--family", "path"}).code == 2);
}

TEST_CASE("verify") {
  auto r = invoke({"verify", "--gen", "cycle:5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("recursion: betti=[1,5,10]") != std::string::npos);
  CHECK(r.out.find("homology_T: betti=[1,5,10]") != std::string::npos);
  CHECK(r.out.find("homology_S: betti=[1,5,10]") != std::string::npos);
  CHECK(r.out.find("OK") != std::string::npos);
  auto j = nlohmann::json::parse(invoke({"verify", "--gen", "path:4", "--output", "json"}).out);
  CHECK(j["ok"] == true);
  CHECK(j["reports"].size() == 4);
  auto sweep = invoke({"verify", "--all-connected-up-to", "4"});
  CHECK(sweep.code == 0);
  CHECK(sweep.out.find("10 graphs, all OK") != std::string::npos);
  CHECK(invoke({"verify", "--all-connected-up-to", "4", "--gen", "path:3"}).code == 2);
  CHECK(invoke({"verify", "--all-connected-up-to", "9"}).code == 2);
}

TEST_CASE("help exits cleanly") {
  auto r = invoke({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify") != std::string::npos);
}
