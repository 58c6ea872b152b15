#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#ifndef BERN_CLI_PATH
#define BERN_CLI_PATH "bern"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(BERN_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf;
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  while (size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  int rc = pclose(p);
  return {WEXITSTATUS(rc), out};
}

nlohmann::json strip_time(nlohmann::json j) {
  j.erase("wall_time_s");
  return j;
}

}  // namespace

TEST_CASE("kernel subcommand computes I(2, 0.5) = 4/3") {
  auto res = run("kernel i --t 2 --r 0.5 --method series");
  CHECK(res.exit_code == 0);
  auto j = nlohmann::json::parse(res.output);
  CHECK(j["value"].get<double>() == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("bernstein exact-h2 at r = 0 gives n - 1") {
  auto res = run("bernstein exact-h2 --n 4 --r 0");
  CHECK(res.exit_code == 0);
  auto j = nlohmann::json::parse(res.output);
  CHECK(j["results"][0]["value"].get<double>() == doctest::Approx(3.0).epsilon(1e-10));
}

TEST_CASE("verify psi exits zero") {
  auto res = run("verify psi");
  CHECK(res.exit_code == 0);
  auto j = nlohmann::json::parse(res.output);
  CHECK(j["passed"].get<bool>());
  CHECK(j["checks"].size() >= 1);
}

TEST_CASE("unknown flags give exit code 2") {
  CHECK(run("kernel i --no-such-flag 1").exit_code == 2);
  CHECK(run("bogus-subcommand").exit_code == 2);
}

TEST_CASE("norm subcommand reads a JSON function") {
  const char* path = "cli_test_fn.json";
  {
    std::ofstream f(path);
    f << R"({"constant":[0,0],"terms":[{"pole":[2,0],"coeffs":[[1,0]]}]})";
  }
  auto res = run(std::string("norm --space hardy:2 --f ") + path);
  CHECK(res.exit_code == 0);
  auto j = nlohmann::json::parse(res.output);
  // 1/(1-0.5 z): norm (1-0.25)^{-1/2}
  CHECK(j["value"].get<double>() == doctest::Approx(1.0 / std::sqrt(0.75)).epsilon(1e-10));
  std::remove(path);
}

TEST_CASE("identical invocations produce identical payloads modulo wall time") {
  std::string args = "bernstein sample --n 3 --r 0.6 --samples 5 --seed 42 --space hardy:2";
  auto a = run(args);
  auto b = run(args);
  CHECK(a.exit_code == 0);
  CHECK(strip_time(nlohmann::json::parse(a.output)) ==
        strip_time(nlohmann::json::parse(b.output)));
}

TEST_CASE("CSV and JSON sweeps carry identical numeric values") {
  std::string base = "bernstein sweep --sweep-mode lower --n-list 2 --n-list 4 "
                     "--r-list 0.5 --space hardy:2";
  auto js = run(base + " --format json");
  auto cs = run(base + " --format csv");
  REQUIRE(js.exit_code == 0);
  REQUIRE(cs.exit_code == 0);
  auto j = nlohmann::json::parse(js.output);
  // compare the serialized numbers byte for byte
  std::string csv = cs.output;
  for (const auto& row : j["results"]) {
    std::string v = nlohmann::json(row["value"].get<double>()).dump();
    CHECK(csv.find(v) != std::string::npos);
    std::string nz = nlohmann::json(row["normalized"].get<double>()).dump();
    CHECK(csv.find(nz) != std::string::npos);
  }
}
