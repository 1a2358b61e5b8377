// End-to-end tests for the borderline executable: spawn the real binary,
// compare stdout bytes and exit codes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& argline) {
  std::string cmd = std::string(BORDERLINE_CLI_PATH) + " " + argline + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, n);
  int status = pclose(pipe);
  res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string diag_tensor_file() {
  std::string path = "cli_test_diag.json";
  std::ofstream f(path);
  f << R"({"shape": [3, 3, 3], "entries": [)";
  for (int flat = 0; flat < 27; ++flat) {
    bool diag = flat == 0 || flat == 13 || flat == 26;
    f << (flat ? ", " : "") << (diag ? 1 : 0);
  }
  f << "]}";
  return path;
}

}  // namespace

TEST_CASE("hilbert function row") {
  RunResult r = run("hf --ring P2 --ideal 'y0^2,y1^3,y2^4' --range 0..6");
  CHECK(r.code == 0);
  CHECK(r.out == "1 3 5 6 5 3 1\n");
}

TEST_CASE("hf at explicit multidegrees") {
  RunResult r = run("hf --ring P1xP1 --ideal 'a1*b1' --degree '(1,1)' "
                    "--degree '(2,2)'");
  CHECK(r.code == 0);
  CHECK(r.out == "3 5\n");
}

TEST_CASE("annihilator of a plane monomial") {
  RunResult r = run("ann 'x0*x1^2*x2^3'");
  CHECK(r.code == 0);
  CHECK(r.out == "y0^2, y1^3, y2^4\n");
}

TEST_CASE("annihilator as JSON") {
  RunResult r = run("ann --json 'x0*x1^2*x2^3'");
  CHECK(r.code == 0);
  auto rep = nlohmann::json::parse(r.out);
  CHECK(rep["procedure"] == "ann");
  CHECK(rep["verdict"] == "ok");
  std::vector<std::string> gens = rep["annihilator"]["generators"];
  CHECK(gens == std::vector<std::string>{"y0^2", "y1^3", "y2^4"});
}

TEST_CASE("ring descriptor report") {
  RunResult r = run("ring P1xP2");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "descriptor: P1xP2\n"
        "blocks: 2 3\n"
        "operators: a1 a2 b1 b2 b3\n"
        "forms: a1 a2 b1 b2 b3\n");
  RunResult single = run("ring P2");
  CHECK(single.code == 0);
  CHECK(single.out ==
        "descriptor: P2\n"
        "blocks: 3\n"
        "operators: y0 y1 y2\n"
        "forms: x0 x1 x2\n");
}

TEST_CASE("groebner basis of a principal ideal") {
  RunResult r = run("gb --ring P2 --ideal 'y0^2'");
  CHECK(r.code == 0);
  CHECK(r.out == "y0^2\n");
}

TEST_CASE("saturation strips an irrelevant factor") {
  RunResult r = run("sat --ring P1 --ideal 'y0^2, y0*y1'");
  CHECK(r.code == 0);
  CHECK(r.out == "y0\n");
}

TEST_CASE("monomial border rank") {
  RunResult r = run("monomial-br 'x0*x1^2*x2^3'");
  CHECK(r.code == 0);
  CHECK(r.out == "6\n");
}

TEST_CASE("empty and nonempty point searches") {
  RunResult empty = run("enumerate --filter 'x0*x1*x2' -r 3 --cap 3");
  CHECK(empty.code == 0);
  CHECK(empty.out == "0\n");
  RunResult some = run("enumerate --filter 'x0*x1*x2' -r 4 --cap 4");
  CHECK(some.code == 0);
  REQUIRE(!some.out.empty());
  long count = std::strtol(some.out.c_str(), nullptr, 10);
  CHECK(count > 0);
}

TEST_CASE("wildness of the diagonal tensor from a file") {
  std::string path = diag_tensor_file();
  RunResult r = run("wild3 --m 3 --tensor @" + path);
  std::remove(path.c_str());
  CHECK(r.code == 0);
  CHECK(r.out == "not wild\n");
}

TEST_CASE("wildness of an inline trilinear form") {
  RunResult r = run(
      "wild3 --m 3 --ring P2xP2xP2 --tensor "
      "'a2*b1*c2 + a2*b2*c1 + a1*b1*c3 + a1*b3*c1 + a3*b1*c1'");
  CHECK(r.code == 0);
  CHECK(r.out == "wild\n");
}

TEST_CASE("identifiability verdicts and exit codes") {
  RunResult yes = run("identifiable 'x0^3 + x1^3 + x2^3' -r 3");
  CHECK(yes.code == 0);
  CHECK(yes.out.find("border identifiable") == 0);
  RunResult no = run("identifiable 'x0*x1^2*x2^3' -r 6");
  CHECK(no.code == 2);
  CHECK(no.out == "no plateau\n");
}

TEST_CASE("vspbar routes a ternary cubic") {
  RunResult r = run("vspbar 'x0*x1*x2'");
  CHECK(r.code == 0);
  CHECK(r.out.find("shape: P^2\n") != std::string::npos);
  CHECK(r.out.find("r: 4\n") != std::string::npos);
}

TEST_CASE("bad input reports exit code 1") {
  RunResult r = run("hf --ring Q7 --ideal 'y0' --range 0..2");
  CHECK(r.code == 1);
  CHECK(r.out.find("error:") == 0);
  RunResult bad = run("ann 'x0 +* x1'");
  CHECK(bad.code == 1);
  RunResult unknown = run("frobnicate");
  CHECK(unknown.code == 1);
}

TEST_CASE("thread override must be a positive integer") {
  RunResult r = run("hf --ring P2 --ideal 'y0' --range 0..1");
  CHECK(r.code == 0);
  std::string cmd = std::string("BORDERLINE_THREADS=zero ") +
                    BORDERLINE_CLI_PATH + " hf --ring P2 --ideal 'y0' "
                    "--range 0..1 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  CHECK(WEXITSTATUS(status) == 1);
  CHECK(out.find("error:") == 0);
}

TEST_CASE("golden corpus replays byte for byte") {
  RunResult r = run(std::string("corpus --dir ") + BORDERLINE_CORPUS_DIR);
  INFO(r.out);
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("cases match\n") != std::string::npos);
}
