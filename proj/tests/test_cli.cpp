#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "corpus.hpp"
#include "hgw/generators.hpp"
#include "hgw/graph.hpp"
#include "hgw/hypergroup.hpp"
#include "hgw/serialize.hpp"

using namespace hgw;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

const char* cli_path() { return std::getenv("HGW_BIN"); }

CliResult run_cli(const std::string& args) {
  std::string command = std::string(cli_path()) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) result.output.append(buffer, got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string temp_path(const std::string& name) {
  return std::string("/tmp/hgw_cli_test_") + std::to_string(getpid()) + "_" + name;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli end to end" * doctest::skip(cli_path() == nullptr)) {
  SUBCASE("check petersen: productive, exit 0") {
    auto result = run_cli("check petersen --base 0");
    CHECK(result.exit_code == 0);
    CHECK(contains(result.output, "distance-regular"));
    CHECK(contains(result.output, "verdict: productive"));
  }

  SUBCASE("check fig2: s1s2, not distance-regular") {
    auto result = run_cli("check fig2 --base 0");
    CHECK(result.exit_code == 0);
    CHECK(contains(result.output, "classification: s1s2"));
    CHECK(contains(result.output, "distance-regular no"));
  }

  SUBCASE("check path3 from an end vertex: exit 2") {
    std::string path = temp_path("p3.graph");
    save_graph(Graph(3, {{0, 1}, {1, 2}}), path);
    auto result = run_cli("check " + path + " --base 0");
    CHECK(result.exit_code == 2);
    CHECK(contains(result.output, "not self-centered"));
    std::remove(path.c_str());
  }

  SUBCASE("check non-productive graph: exit 1 with witness") {
    std::string path = temp_path("np7.graph");
    save_graph(hgw::testing::non_productive7().graph, path);
    auto result = run_cli("check " + path);
    CHECK(result.exit_code == 1);
    CHECK(contains(result.output, "verdict: not productive"));
    CHECK(contains(result.output, "commutativity fails at (i, j, k) = (1, 2, 1)"));
    std::remove(path.c_str());
  }

  SUBCASE("check --json round-trips the verdict") {
    auto result = run_cli("check fig2 --json");
    CHECK(result.exit_code == 0);
    Json j = Json::parse(result.output);
    CHECK(j["schema"] == "1");
    Verdict parsed = verdict_from_json(j);
    Verdict direct = decide_productive(figure2_graph());
    CHECK(parsed.productive == direct.productive);
    CHECK(parsed.classification == direct.classification);
    CHECK(parsed.methods == direct.methods);
    CHECK(parsed.constants == direct.constants);
    CHECK(parsed.mu == direct.mu);
    // reserialization is byte-identical
    CHECK(verdict_to_json(parsed) == verdict_to_json(direct));
  }

  SUBCASE("structure fig2 prints the exact table") {
    auto result = run_cli("structure fig2");
    CHECK(result.exit_code == 0);
    CHECK(contains(result.output, "x1 o x1 = 1/6 x0 + 1/3 x1 + 1/2 x2"));
    CHECK(contains(result.output, "x1 o x2 = 1/2 x1 + 1/3 x2 + 1/6 x3"));
    CHECK(contains(result.output, "x1 o x3 = x2"));
    CHECK(contains(result.output, "x3 o x3 = x0"));
  }

  SUBCASE("structure K_2") {
    auto result = run_cli("structure complete 2");
    CHECK(result.exit_code == 0);
    CHECK(contains(result.output, "x1 o x1 = x0"));
  }

  SUBCASE("structure petersen reports the diameter-2 parameters") {
    auto result = run_cli("structure petersen");
    CHECK(result.exit_code == 0);
    CHECK(contains(result.output, "x1 o x1 = 1/3 x0 + 2/3 x2"));
    CHECK(contains(result.output, "mu1 = 3, mu2 = 6, m = 0"));
  }

  SUBCASE("gen cycle 4 emits the canonical edge list") {
    std::string path = temp_path("c4.graph");
    auto result = run_cli("gen cycle 4 --out " + path);
    CHECK(result.exit_code == 0);
    CHECK(load_graph(path) == cycle(4));

    // same edge set as the cayley description
    std::string cayley_path = temp_path("z4.graph");
    run_cli("gen cayley z4 1,3 --out " + cayley_path);
    CHECK(load_graph(cayley_path) == load_graph(path));
    std::remove(path.c_str());
    std::remove(cayley_path.c_str());
  }

  SUBCASE("check --dump-matrices emits exact matrices") {
    auto result = run_cli("check cycle 4 --json --dump-matrices");
    CHECK(result.exit_code == 0);
    Json j = Json::parse(result.output);
    REQUIRE(j.contains("matrices"));
    CHECK(j["matrices"]["transition"][1][1][0] == "1/2");
    CHECK(j["matrices"]["adjacency"].size() == 3);
    CHECK(j["matrices"]["mu"] == Json::array({1, 2, 1}));
  }

  SUBCASE("simulate fig2 passes the gate") {
    auto result = run_cli("simulate fig2 --seq 1,2 --samples 100000 --seed 7");
    CHECK(result.exit_code == 0);
    CHECK(contains(result.output, "gate: PASS"));
  }

  SUBCASE("simulate --json carries provenance") {
    auto result = run_cli("simulate cycle 4 --seq 1,1 --samples 2000 --seed 11 --json");
    CHECK(result.exit_code == 0);
    Json j = Json::parse(result.output);
    CHECK(j["schema"] == "1");
    CHECK(j["rng"] == "mt19937_64");
    CHECK(j["seed"] == 11);
    CHECK(j["workers"] == 1);
    CHECK(j["exact"][0] == "1/2");
    CHECK(j["pass"] == true);
  }

  SUBCASE("usage errors exit with 2") {
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("check").exit_code == 2);
    CHECK(run_cli("check cycle").exit_code == 2);       // missing parameter
    CHECK(run_cli("check platonic teapot").exit_code == 2);
    CHECK(run_cli("check /nonexistent/file").exit_code == 2);
    CHECK(run_cli("check cycle 4 --base 9").exit_code == 2);
    CHECK(run_cli("simulate cycle 4 --seq 1,,2").exit_code == 2);
  }

  SUBCASE("disconnected input exits with 2") {
    std::string path = temp_path("disc.graph");
    save_graph(Graph(4, {{0, 1}, {2, 3}}), path);
    auto result = run_cli("check " + path);
    CHECK(result.exit_code == 2);
    CHECK(contains(result.output, "disconnected"));
    std::remove(path.c_str());
  }
}
