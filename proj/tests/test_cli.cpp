#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(ASF_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  char buf[4096];
  while (size_t n = fread(buf, 1, sizeof buf, pipe)) res.out.append(buf, n);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string config(const std::string& name) {
  return std::string("--config ") + ASF_CONFIG_DIR + "/" + name;
}

}  // namespace

TEST_CASE("paving subcommand on the SL(2) run") {
  auto res = run_cli("paving " + config("sl2_slope32.json"));
  REQUIRE(res.exit_code == 0);
  auto j = json::parse(res.out);
  CHECK(j["affine_paving"] == true);
  CHECK(j["poly"] == json::array({1, 1}));
  CHECK(j["problem"]["s"] == "3/2");

  // determinism: byte-identical across runs
  auto again = run_cli("paving " + config("sl2_slope32.json"));
  CHECK(res.out == again.out);
}

TEST_CASE("validation failure exits 2 with an error object") {
  auto res = run_cli("paving " + config("bad_threshold.json"));
  CHECK(res.exit_code == 2);
  auto j = json::parse(res.out);
  CHECK(j["error"]["kind"] == "validation");
  CHECK(j["error"]["message"].get<std::string>().find("violated") !=
        std::string::npos);

  auto missing = run_cli("paving --config /nonexistent.json");
  CHECK(missing.exit_code == 2);

  auto usage = run_cli("paving");
  CHECK(usage.exit_code == 2);
}

TEST_CASE("radius and auto-extend flags") {
  auto res =
      run_cli("paving --radius 0 --no-auto-extend " + config("sl2_slope32.json"));
  REQUIRE(res.exit_code == 0);
  auto j = json::parse(res.out);
  CHECK(j["cells"].size() == 1);
}

TEST_CASE("torus subcommand") {
  auto res = run_cli("torus " + config("sl2_slope32.json"));
  REQUIRE(res.exit_code == 0);
  auto j = json::parse(res.out);
  CHECK(j["x"] == json::array({"1/4"}));
  CHECK(j["alcove_interior"] == true);
  CHECK(j["h"]["is_torus"] == true);
  CHECK(j["order_l"] == 2);
  CHECK(j["admissible"]["ok"] == true);
  CHECK(j["admissible"]["piece_dim"] == 2);
}

TEST_CASE("hessenberg subcommand") {
  auto res = run_cli("hessenberg " + config("sl2_slope32.json"));
  REQUIRE(res.exit_code == 0);
  auto j = json::parse(res.out);
  CHECK(j["h"]["is_torus"] == true);
  CHECK(j["empty"] == false);
  CHECK(j["dim"] == 0);
}

TEST_CASE("oracle subcommand") {
  auto res = run_cli("oracle " + config("gl2_slope32.json"));
  REQUIRE(res.exit_code == 0);
  auto j = json::parse(res.out);
  CHECK(j["total"] == 3);
  CHECK(j["verdict"]["match"] == true);

  auto res3 = run_cli("oracle --q 3 " + config("gl2_slope32.json"));
  REQUIRE(res3.exit_code == 0);
  CHECK(json::parse(res3.out)["total"] == 4);

  auto gl3 = run_cli("oracle " + config("gl3_slope23.json"));
  REQUIRE(gl3.exit_code == 0);
  CHECK(json::parse(gl3.out)["verdict"]["match"] == true);

  auto out_of_scope = run_cli("oracle " + config("gl4_out_of_scope.json"));
  CHECK(out_of_scope.exit_code == 2);
  auto err = json::parse(out_of_scope.out);
  CHECK(err["error"]["message"].get<std::string>().find("oracle limit") !=
        std::string::npos);

  auto wrong_type = run_cli("oracle " + config("sl2_slope32.json"));
  CHECK(wrong_type.exit_code == 2);
}
