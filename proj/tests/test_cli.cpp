#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "shp/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = shp::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  auto r = run(args);
  REQUIRE(r.code <= 1);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("member exit codes") {
  CHECK(run({"member", "--k", "2", "2+ 1-"}).code == 0);
  CHECK(run({"member", "--k", "2", "2+ 0-"}).code == 1);
  CHECK(run({"member", "--k", "2", "--mode", "paper-strict", "2+ 1-"}).code == 1);
  CHECK(run({"member", "--k", "2", "--mode", "bogus", "2+"}).code == 2);
  CHECK(run({"member", "--k", "2", "3+"}).code == 2);
  CHECK(run({"member", "2+"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("mult") {
  CHECK(run({"mult", "--k", "2", "2+ 2+"}).out == "2\n");
  CHECK(run({"mult", "--k", "2", ""}).out == "1\n");
  CHECK(run({"mult", "--k", "2", "--literal", ""}).out == "0\n");
  auto j = run_json({"mult", "--k", "2", "2- 1+"});
  CHECK(j["multiplicity"] == "1");
  CHECK(j["word"] == "2- 1+");
  CHECK(j["k"] == 2);
}

TEST_CASE("enumerate streams sorted lines") {
  auto r = run({"enumerate", "--k", "2", "--n", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "2+\t1\n2-\t1\n");
  auto j = run_json({"enumerate", "--k", "1", "--n", "3"});
  CHECK(j["total"] == "48");
}

TEST_CASE("resource caps map to exit code 3") {
  ::setenv("SHP_RESOURCE_CAP", "5", 1);
  auto r = run({"enumerate", "--k", "2", "--n", "4"});
  ::unsetenv("SHP_RESOURCE_CAP");
  CHECK(r.code == 3);
  CHECK(r.err.find("resource limit") != std::string::npos);
}

TEST_CASE("decompose") {
  CHECK(run({"decompose", "--k", "2", "--perm", "1,8,15", "--signs", "-,+,-"}).out ==
        "trees: 1\n");
  CHECK(run({"decompose", "--k", "2", "--perm", "1,8,15", "--signs=-,+,-"}).out == "trees: 1\n");
  CHECK(run({"decompose", "--k", "2", "--perm", "1,1", "--signs", "+,-"}).code == 2);

  const auto dot = std::filesystem::temp_directory_path() / "shp_cli_test.dot";
  auto r = run({"decompose", "--k", "2", "--perm", "1,8,15", "--signs", "-,+,-", "--dot",
                dot.string()});
  CHECK(r.code == 0);
  std::ifstream in(dot);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str().rfind("digraph", 0) == 0);
  std::filesystem::remove(dot);

  auto j = run_json({"decompose", "--k", "2", "--perm", "1,8,15", "--signs", "-,+,-"});
  CHECK(j["trees"] == 1);
  CHECK(j["word"] == "1+ 1- 2+");
}

TEST_CASE("derive-sign") {
  auto r = run({"derive-sign", "--k", "2", "--perm", "1,2"});
  CHECK(r.code == 0);
  CHECK(r.out == "+,-\n");
  r = run({"derive-sign", "--perm", "2,1"});
  CHECK(r.code == 1);
  CHECK(r.out == "not heapable\n");
}

TEST_CASE("scaling") {
  CHECK(run({"scaling", "--k", "2", "--n", "2", "--exact"}).out == "7/4\n");
  CHECK(run({"scaling", "--k", "2", "--n", "1", "--exact"}).out == "1\n");
  auto j = run_json({"scaling", "--k", "2", "--n", "2", "--exact"});
  CHECK(j["Z_exact"] == "7/4");
  auto mc1 = run({"scaling", "--k", "2", "--n", "3", "--samples", "500", "--seed", "4"});
  auto mc2 = run({"scaling", "--k", "2", "--n", "3", "--samples", "500", "--seed", "4",
                  "--threads", "3"});
  CHECK(mc1.code == 0);
  CHECK(mc1.out == mc2.out);
  CHECK(mc1.out.rfind("Z_mc=", 0) == 0);
}

TEST_CASE("simulate is reproducible") {
  auto a = run({"simulate", "--k", "2", "--n", "6", "--seed", "9"});
  auto b = run({"simulate", "--k", "2", "--n", "6", "--seed", "9"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 7);
}

TEST_CASE("predecessors") {
  CHECK(run({"predecessors", "--k", "2", "2+ 1-"}).out == "2-\t1+\t1\n");
  auto j = run_json({"predecessors", "--k", "2", "2+ 2+"});
  CHECK(j["predecessors"].size() == 2);
  CHECK(j["predecessors"][0]["kill"].is_null());
}

TEST_CASE("automaton export") {
  auto r = run({"automaton", "--k", "2", "--which", "a2", "--mode", "paper-strict"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["name"] == "A2");
  CHECK(j["mode"] == "paper-strict");
}

TEST_CASE("--out writes to a file") {
  const auto path = std::filesystem::temp_directory_path() / "shp_cli_out.txt";
  auto r = run({"mult", "--k", "2", "--out", path.string(), "2+ 2+"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "2");
  std::filesystem::remove(path);
}
