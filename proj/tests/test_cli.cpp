#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(HAMWALK_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const char* name) { return std::string(HAMWALK_TEST_DATA) + "/" + name; }

std::string tmp(const char* name) {
  return (std::filesystem::temp_directory_path() / (std::string("hamwalk_cli_") + name)).string();
}

std::vector<std::string> steps_of(const std::string& json_text) {
  return nlohmann::json::parse(json_text)["steps"].get<std::vector<std::string>>();
}

}  // namespace

TEST_CASE("hampath on the q8 table") {
  auto r = run("hampath --group " + data("q8.json") + " --gens i,j --algorithm 2gen");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["steps"].size() == 7);
  CHECK(j["verified"] == true);
  CHECK(j["kind"] == "path");
}

TEST_CASE("hamcycle on z4") {
  auto r = run("hamcycle --group " + data("z4.json") + " --gens 1 --algorithm pgroup");
  REQUIRE(r.code == 0);
  CHECK(steps_of(r.out) == std::vector<std::string>{"1", "1", "1", "1"});
}

TEST_CASE("non-nilpotent input is refused") {
  auto r = run("hampath --group " + data("s3.json") + " --gens a,b --algorithm 2gen");
  CHECK(r.code == 1);
  CHECK(r.out.find("NotNilpotent") != std::string::npos);
  auto u = run("hampath --group " + data("s3.json") + " --gens a,b,ab");
  CHECK(u.code == 1);
  CHECK(u.out.find("UnsupportedByPaper") != std::string::npos);
}

TEST_CASE("golden walks through the cli") {
  CHECK(steps_of(run("hampath --group builtin:q8 --gens i,j").out) ==
        std::vector<std::string>{"i", "j", "i", "j", "i", "j", "i"});
  CHECK(steps_of(run("hamcycle --group builtin:q8 --gens i,j").out) ==
        std::vector<std::string>{"i", "j", "i", "j", "i", "j", "i", "j"});
  CHECK(steps_of(run("hampath --group builtin:cyclic:6 --gens 2,5").out) ==
        std::vector<std::string>{"2", "2", "5", "2", "2"});
  CHECK(steps_of(run("hampath --group builtin:z6 --gens 2,3 --algorithm pxa").out) ==
        std::vector<std::string>{"3", "2", "3", "2", "3"});
  CHECK(steps_of(run("hamcycle --group builtin:z4 --gens 1,3 --algorithm coset").out) ==
        std::vector<std::string>{"1", "1", "1", "1"});
  auto v = run("hampath --group builtin:product:q8,z3 --gens \"(i,1),(j,0)\" --algorithm val4");
  CHECK(v.code == 0);
  auto a = run("hampath --group builtin:d8 --gens r,f --algorithm arcforcing");
  CHECK(a.code == 0);
  auto ac = run("hamcycle --group builtin:d8 --gens r,f --algorithm arcforcing");
  CHECK(ac.code == 0);
}

TEST_CASE("walk files round trip through verify") {
  const auto walk = tmp("walk.json");
  const auto dot = tmp("walk.dot");
  REQUIRE(run("hampath --group " + data("q8.json") + " --gens i,j --out " + walk + " --dot " + dot).code == 0);
  auto ok = run("verify --walk " + walk);
  CHECK(ok.code == 0);
  CHECK(ok.out.find("valid") == 0);
  std::ifstream in(dot);
  std::string text((std::istreambuf_iterator<char>(in)), {});
  CHECK(text.find("digraph") == 0);

  // swap two steps: the recorded vertices no longer match
  auto j = nlohmann::json::parse(std::ifstream(walk));
  std::swap(j["steps"][0], j["steps"][1]);
  std::ofstream(walk) << j.dump();
  CHECK(run("verify --walk " + walk).code == 1);

  std::ofstream(walk) << "{\"start\": 0";
  CHECK(run("verify --walk " + walk).code == 2);
  CHECK(run("verify --walk " + tmp("does_not_exist.json")).code == 2);
  std::filesystem::remove(walk);
  std::filesystem::remove(dot);
}

TEST_CASE("io and usage errors exit with 2") {
  CHECK(run("hampath --group " + data("missing.json") + " --gens a").code == 2);
  CHECK(run("hampath --group " + data("bad_field.json") + " --gens a").code == 2);
  CHECK(run("hampath --group builtin:q8 --gens i,j --algorithm magic").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("analyze --frobnicate").code == 2);
  // a non-group is a domain error
  CHECK(run("analyze --group " + data("not_a_group.json")).code == 1);
}

TEST_CASE("analyze") {
  auto r = run("analyze --group builtin:d8 --gens e,r^3f");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["order"] == 8);
  CHECK(j["nilpotent"] == true);
  CHECK(j["arc_forcing"].size() == 2);
  CHECK(j["series"]["length"] == 2);
  CHECK(j["series"]["quotient_orders"] == nlohmann::json::array({2}));
  auto s = run("analyze --group " + data("s3.json"));
  REQUIRE(s.code == 0);
  CHECK(nlohmann::json::parse(s.out)["nilpotent"] == false);
}

TEST_CASE("oracle command") {
  auto r = run("oracle --group builtin:q8 --gens i,j --kind path");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["status"] == "Found");
  CHECK(j["milnor_nonexistence"] == false);
  CHECK(nlohmann::json::parse(run("oracle --group builtin:q8 --gens i,j --budget 0").out)["status"] == "Timeout");
  auto m = run("oracle --group builtin:semidirect:13 --gens u^3,u^2t --budget 10");
  REQUIRE(m.code == 0);
  CHECK(nlohmann::json::parse(m.out)["milnor_nonexistence"] == true);
}

TEST_CASE("export command") {
  auto r = run("export --group builtin:z2 --gens 1");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("digraph") == 0);
  CHECK(r.out.find("bold") == std::string::npos);
}

TEST_CASE("harness command") {
  const auto report = tmp("report.jsonl");
  auto r = run("harness --max-order 12 --out " + report);
  CHECK(r.code == 0);
  CHECK(r.out.find("total:") != std::string::npos);
  std::ifstream in(report);
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    CHECK(nlohmann::json::parse(line).contains("outcome"));
    ++n;
  }
  CHECK(n > 100);
  std::filesystem::remove(report);
}
