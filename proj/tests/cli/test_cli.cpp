// End-to-end checks of the installed command-line binary, driven through
// popen.  HTODA_CLI_PATH is injected by the build as the full path to the
// freshly built executable.

#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(HTODA_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cover count in both output formats") {
  RunResult r = run("hurwitz --d 2 --profiles \"[2];[2]\"");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "1/2"));

  r = run("hurwitz --d 2 --profiles \"[2];[2]\" --format json");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("value").get<std::string>() == "1/2");
  CHECK(j.at("d").get<int>() == 2);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("nosuchcommand").code == 2);
  CHECK(run("hurwitz --bogus").code == 2);
  CHECK(run("verify-all --inject-fault=never-heard-of-it").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("no profiles means no branch points") {
  RunResult r = run("hurwitz --d 3");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "1/6"));
}

TEST_CASE("enumeration limits exit with code 3") {
  CHECK(run("hurwitz --d 9 --profiles \"[9]\" --oracle").code == 3);
}

TEST_CASE("injected fault trips exactly one check") {
  RunResult r = run(
      "verify-all --d 2 --dmax 2 --D 2 --beta-order 2 "
      "--inject-fault=kappa-sign");
  CHECK(r.code == 1);
  int fails = 0;
  for (size_t pos = 0; (pos = r.out.find("[FAIL]", pos)) != std::string::npos;
       ++pos)
    ++fails;
  CHECK(fails == 1);
  CHECK(contains(r.out, "kappa-antisymmetry"));
}

TEST_CASE("verification battery passes and reports per check") {
  RunResult r = run("verify-all --d 2 --dmax 2 --D 2 --beta-order 2");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "[PASS] combinat/"));
  CHECK(contains(r.out, "[PASS] string-equations/"));
  CHECK_FALSE(contains(r.out, "[FAIL]"));
}

TEST_CASE("operator verification emits a machine-readable report") {
  RunResult r = run("fock-verify --dmax 3 --charges -1:1");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("status").get<std::string>() == "pass");
  CHECK(j.at("report").is_array());
  CHECK(j.at("report").size() > 0);
}

TEST_CASE("solver output is byte-identical across runs") {
  RunResult a = run("string-solve --D 3 --json");
  RunResult b = run("string-solve --D 3 --json");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j.at("D").get<int>() == 3);
}

TEST_CASE("generating series in readable form") {
  RunResult r = run("genfun --D 2 --beta-order 2 --simple");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "Z_simple"));
  CHECK(contains(r.out, "t1"));

  r = run("schur --lambda \"[2,1]\" --D 3");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "(1/3)*t1^3"));
}
