#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "caycodes/cli.hpp"

using caycodes::run_cli;
using nlohmann::json;

namespace {

struct CliResult {
  int status;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = run_cli(std::move(args), out, err);
  return {status, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("caycodes_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("gamma code prints the canonical code") {
  CliResult r = cli({"gamma", "code", "-m", "3", "-l", "2", "-H", "2"});
  REQUIRE(r.status == 0);
  json j = json::parse(r.out);
  CHECK(j["code"] == json::array({"(0,0)", "(1,1)"}));
  CHECK(j["size"] == 2);
  CHECK(j["verdict"] == "perfect");
}

TEST_CASE("gamma check prints the condition report") {
  CliResult r = cli({"gamma", "check", "-m", "6", "-l", "3", "-H", "3"});
  REQUIRE(r.status == 0);
  json j = json::parse(r.out);
  CHECK(j["div3_m"] == true);
  CHECK(j["div3_lh"] == true);
  CHECK(j["sigma_ok"] == true);
  CHECK(j["admits_code"] == true);
  CHECK(j["params"]["m"] == 6);
}

TEST_CASE("gamma build emits dot and json") {
  CliResult dot = cli({"gamma", "build", "-m", "3", "-l", "1", "-H", "1"});
  REQUIRE(dot.status == 0);
  CHECK(dot.out ==
        "digraph {\n"
        "  \"(0,0)\";\n"
        "  \"(1,0)\";\n"
        "  \"(2,0)\";\n"
        "  \"(0,0)\" -> \"(1,0)\";\n"
        "  \"(0,0)\" -> \"(2,0)\";\n"
        "  \"(1,0)\" -> \"(0,0)\";\n"
        "  \"(1,0)\" -> \"(2,0)\";\n"
        "  \"(2,0)\" -> \"(0,0)\";\n"
        "  \"(2,0)\" -> \"(1,0)\";\n"
        "}\n");

  CliResult a = cli({"gamma", "build", "-m", "3", "-l", "2", "-H", "2", "--format", "json"});
  CliResult b = cli({"gamma", "build", "-m", "3", "-l", "2", "-H", "2", "--format", "json"});
  REQUIRE(a.status == 0);
  CHECK(a.out == b.out);  // byte-stable
  json j = json::parse(a.out);
  CHECK(j["vertices"].size() == 6);
  CHECK(j["arcs"].size() == 12);
}

TEST_CASE("gamma realize reports the realized group") {
  CliResult r = cli({"gamma", "realize", "-m", "3", "-l", "2", "-H", "2"});
  REQUIRE(r.status == 0);
  json j = json::parse(r.out);
  CHECK(j["proper"] == true);
  CHECK(j["group"] == "6");
  std::set<std::string> gens{j["s"].get<std::string>(), j["s_prime"].get<std::string>()};
  CHECK(gens == std::set<std::string>{"(1)", "(2)"});
  CHECK(j["isomorphism_verified"] == true);
}

TEST_CASE("cayley params lists both assignments") {
  CliResult r = cli({"cayley", "params", "--group", "6", "--gens", "(2);(1)"});
  REQUIRE(r.status == 0);
  json j = json::parse(r.out);
  REQUIRE(j["assignments"].size() == 2);
  const auto& first = j["assignments"][0];
  CHECK(first["s"] == "(2)");
  CHECK(first["m"] == 3);
  CHECK(first["l"] == 2);
  CHECK(first["h"] == 2);
  CHECK(first["predicate"] == true);
  const auto& second = j["assignments"][1];
  CHECK(second["s"] == "(1)");
  CHECK(second["m"] == 6);
  CHECK(second["l"] == 1);
  CHECK(second["h"] == 4);
}

TEST_CASE("codes enum and find") {
  CliResult all = cli({"codes", "enum", "--group", "6", "--gens", "(1);(2)"});
  REQUIRE(all.status == 0);
  json j = json::parse(all.out);
  CHECK(j["count"] == 3);
  CHECK(j["codes"][0]["code"] == json::array({"(0)", "(3)"}));
  CHECK(j["codes"][1]["code"] == json::array({"(1)", "(4)"}));
  CHECK(j["codes"][2]["code"] == json::array({"(2)", "(5)"}));

  CliResult one = cli({"codes", "find", "--group", "6", "--gens", "(1);(2)"});
  REQUIRE(one.status == 0);
  CHECK(json::parse(one.out)["count"] == 1);

  CliResult at = cli({"codes", "enum", "--group", "6", "--gens", "(1);(2)",
                      "--containing", "(1)"});
  REQUIRE(at.status == 0);
  json ja = json::parse(at.out);
  CHECK(ja["count"] == 1);
  CHECK(ja["codes"][0]["code"] == json::array({"(1)", "(4)"}));

  CliResult none = cli({"codes", "enum", "--group", "6", "--gens", "(1);(4)"});
  REQUIRE(none.status == 0);
  CHECK(json::parse(none.out)["count"] == 0);
}

TEST_CASE("codes round-trip through the json export") {
  auto path = temp_file("gamma322.json");
  CliResult build = cli({"gamma", "build", "-m", "3", "-l", "2", "-H", "2", "--format",
                         "json", "-o", path.string()});
  REQUIRE(build.status == 0);

  CliResult direct = cli({"codes", "enum", "--gamma", "3,2,2"});
  CliResult via_file = cli({"codes", "enum", "--input", path.string()});
  REQUIRE(direct.status == 0);
  REQUIRE(via_file.status == 0);
  CHECK(direct.out == via_file.out);
  json j = json::parse(direct.out);
  CHECK(j["count"] == 3);
  CHECK(j["codes"][0]["code"] == json::array({"(0,0)", "(1,1)"}));
  std::filesystem::remove(path);
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(cli({"gamma", "code", "-m", "3", "-l", "2"}).status == 2);  // missing -H
  CHECK(cli({"nonsense"}).status == 2);
  CHECK(cli({}).status == 2);
  CHECK(cli({"codes", "enum"}).status == 2);  // no source
  CHECK(cli({"codes", "enum", "--group", "6", "--gens", "(1);(2)", "--gamma", "3,2,2"}).status == 2);
  CHECK(cli({"codes", "enum", "--group", "2,3", "--gens", "(1,1);(0,1)"}).status == 2);
  CHECK(cli({"codes", "enum", "--group", "6", "--gens", "(1);(2)", "--containing", "(9)"}).status == 2);
  CHECK(cli({"gamma", "build", "-m", "3", "-l", "1", "-H", "0"}).status == 2);  // degenerate
  CliResult bad = cli({"cayley", "params", "--group", "6", "--gens", "(1)"});
  CHECK(bad.status == 2);
  CHECK(!bad.err.empty());
}

TEST_CASE("help is available and exits zero") {
  CHECK(cli({"--help"}).status == 0);
  CHECK(cli({"gamma", "--help"}).status == 0);
}

TEST_CASE("verify subcommands gate on discrepancies") {
  auto report_path = temp_file("thm1_report.json");
  CliResult v1 = cli({"verify", "thm1", "--max-order", "9", "--report", report_path.string()});
  REQUIRE(v1.status == 0);
  CHECK(v1.out.find("result: PASS") != std::string::npos);
  json report = json::parse(slurp(report_path));
  CHECK(report["max_order"] == 9);
  CHECK(report["discrepancies"].empty());

  CliResult again = cli({"verify", "thm1", "--max-order", "9", "--report", report_path.string()});
  REQUIRE(again.status == 0);
  CHECK(slurp(report_path) == json::parse(slurp(report_path)).dump(2) + "\n");
  std::filesystem::remove(report_path);

  CHECK(cli({"verify", "thm2", "--max-order", "9"}).status == 0);
  CHECK(cli({"verify", "lemmas", "--max-order", "9"}).status == 0);
  CliResult grid = cli({"verify", "prop24", "--max-m", "9", "--max-l", "5"});
  CHECK(grid.status == 0);
  CHECK(grid.out.find("result: PASS") != std::string::npos);
}

TEST_CASE("verify reports are byte-identical across runs") {
  auto p1 = temp_file("rep1.json");
  auto p2 = temp_file("rep2.json");
  auto c1 = temp_file("rep1.csv");
  auto c2 = temp_file("rep2.csv");
  REQUIRE(cli({"verify", "thm1", "--max-order", "8", "--report", p1.string(), "--csv",
               c1.string()}).status == 0);
  REQUIRE(cli({"verify", "thm1", "--max-order", "8", "--report", p2.string(), "--csv",
               c2.string()}).status == 0);
  CHECK(slurp(p1) == slurp(p2));
  CHECK(slurp(c1) == slurp(c2));
  CHECK(!slurp(c1).empty());
  for (const auto& p : {p1, p2, c1, c2}) std::filesystem::remove(p);
}
