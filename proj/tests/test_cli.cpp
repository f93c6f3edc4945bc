#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(LFL_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("eval prints a JSON value with an error estimate") {
  const auto r = run("eval zeta --s 2");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(std::abs(j["re"].get<double>() - M_PI * M_PI / 6.0) < 1e-12);
  CHECK(j["im"].get<double>() == doctest::Approx(0.0));
  CHECK(j.contains("attained_error"));
  const auto d = nlohmann::json::parse(run("eval delta --z 0+1i").out);
  CHECK(std::abs(d["re"].get<double>() - 0.0017853698506421524) < 1e-15);
}

TEST_CASE("eval rejects bad input") {
  CHECK(run("eval zeta --s 1").code == 2);
  CHECK(run("eval zeta --s banana").code == 2);
  CHECK(run("eval nosuch --s 2").code == 2);
  CHECK(run("").code == 2);
}

TEST_CASE("verify emits one JSON report per line") {
  const auto r = run("verify dirichlet");
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 2);
  for (const auto& line : ls) {
    const auto j = nlohmann::ordered_json::parse(line);
    CHECK(j.begin().key() == "check");
    CHECK(j["pass"] == true);
    CHECK(j["runtime_ms"] == 0);
  }
  CHECK(run("verify dirichlet").out == r.out);
}

TEST_CASE("verify exit codes") {
  CHECK(run("verify jacobi --tol 1e-300").code == 1);
  CHECK(run("verify nosuch").code == 2);
  CHECK(run("verify jacobi --tol -1").code == 2);
  const auto timed = lines(run("verify tate --timing").out);
  REQUIRE_FALSE(timed.empty());
  CHECK(nlohmann::json::parse(timed[0]).contains("runtime_ms"));
}

TEST_CASE("tables") {
  const auto tau = lines(run("table tau --max 12").out);
  REQUIRE(tau.size() == 14);
  CHECK(tau[1] == "n,a_n,normalized");
  CHECK(tau[13].rfind("12,-370944,", 0) == 0);
  CHECK(lines(run("table histogram --X 5000 --bins 10").out).size() == 12);
  CHECK(run("table satotake-moments --X 5000").out == run("table sato-tate-moments --X 5000").out);
  CHECK(lines(run("table three-squares --n 3").out).size() == 10);
  const auto none = run("table three-squares --n 7");
  CHECK(none.code == 0);
  CHECK(lines(none.out).size() == 2);
  CHECK(run("table nosuch").code == 2);
}
