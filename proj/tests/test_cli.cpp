#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(PROJCERT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe))
    out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string write_file(const std::string& name, const std::string& body) {
  std::string path = std::string("/tmp/projcert_cli_") + name + ".json";
  std::ofstream(path) << body;
  return path;
}

const char* kTwoRays = R"({
  "dimension": 2,
  "task": "decide",
  "combination": {"terms": [
    {"alpha": 1.0, "set": {"variant": "ray", "direction": [1.0, 1.0]}},
    {"alpha": 1.0, "set": {"variant": "ray", "direction": [-1.0, -1.0]}}
  ]}
})";

const char* kScaledBall = R"({
  "dimension": 2,
  "task": "decide",
  "combination": {"terms": [
    {"alpha": 2.0, "set": {"variant": "ball", "center": [0.0, 0.0], "radius": 1.0}}
  ]}
})";

const char* kTruncatedPair = R"({
  "dimension": 2,
  "task": "decide",
  "combination": {"terms": [
    {"alpha": 1.0, "set": {"variant": "truncated_cone", "radius": 1.0,
      "cone": {"variant": "ray", "direction": [1.0, 0.0]}}},
    {"alpha": 1.0, "set": {"variant": "truncated_cone", "radius": 2.0,
      "cone": {"variant": "ray", "direction": [0.0, 1.0]}}}
  ]}
})";

}  // namespace

TEST_CASE("decide: exit codes follow the verdict") {
  std::string f = write_file("two_rays", kTwoRays);
  RunResult r = run("decide " + f);
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j.at("verdict") == "IsProjector");
  // antipodal rays sum to the projector of the full line
  CHECK(j.at("result_set").at("variant") == "minkowski_sum");

  CHECK(run("decide " + write_file("ball2", kScaledBall)).exit_code == 1);

  RunResult t = run("decide " + write_file("trunc", kTruncatedPair));
  CHECK(t.exit_code == 0);
  CHECK(nlohmann::json::parse(t.out).at("gamma") == 0.0);
}

TEST_CASE("certify embeds the numerical re-check reports") {
  std::string body = kTwoRays;
  std::string f = write_file("certify", body);
  RunResult r = run("certify " + f + " --samples 64");
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j.at("checks").at("gradient_criterion").at("pass").get<bool>());
  CHECK(j.at("checks").at("monotonicity").at("pass").get<bool>());
  CHECK(j.at("checks").at("firm_nonexpansiveness").at("pass").get<bool>());
}

TEST_CASE("input errors exit with code 64") {
  CHECK(run("decide /tmp/projcert_does_not_exist.json").exit_code == 64);
  CHECK(run("decide " + write_file("bad", "{\"bogus\": 1}")).exit_code == 64);
  CHECK(run("decide " + write_file("notjson", "hello")).exit_code == 64);
  CHECK(run("reproduce nosuchfixture").exit_code == 64);
}

TEST_CASE("reproduce runs fixtures by name") {
  CHECK(run("reproduce two-rays").exit_code == 0);
  CHECK(run("reproduce counter-cone-set2").exit_code == 0);
  RunResult all = run("reproduce all");
  CHECK(all.exit_code == 0);
  CHECK(nlohmann::json::parse(all.out).at("all_match").get<bool>());
}

TEST_CASE("oracle-compare certifies closed forms against the grid") {
  std::string f = write_file("oc", R"({
    "dimension": 2,
    "task": "oracle-compare",
    "resolution": 0.001,
    "set": {"variant": "ball", "center": [0.5, -0.25], "radius": 1.5},
    "config": {"samples": 48}
  })");
  RunResult r = run("oracle-compare " + f);
  CHECK(r.exit_code == 0);
  CHECK(nlohmann::json::parse(r.out).at("status") == "agree");
}

TEST_CASE("same seed reproduces byte-identical output") {
  std::string f = write_file("det", kScaledBall);
  RunResult a = run("decide " + f + " --seed 99 --samples 128");
  RunResult b = run("decide " + f + " --seed 99 --samples 128");
  CHECK(a.out == b.out);
  CHECK(a.exit_code == b.exit_code);
  RunResult c = run("reproduce all --seed 5");
  RunResult d = run("reproduce all --seed 5");
  CHECK(c.out == d.out);
}
