// Integration tests running the installed command line binary; the test
// runner passes its location through CLIFFMM_CLI.

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

std::string cli_path() {
  const char* p = std::getenv("CLIFFMM_CLI");
  REQUIRE(p != nullptr);
  return p;
}

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = cli_path() + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 512> buf;
  while (fgets(buf.data(), buf.size(), pipe) != nullptr) r.out += buf.data();
  const int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = std::string("/tmp/cliffmm_test_") + name;
  std::ofstream f(path);
  f << content;
  return path;
}

}  // namespace

TEST_CASE("mul", "[cli]") {
  const RunResult r = run("mul --m 1 \"1*q\" \"1*p\"");
  CHECK(r.status == 0);
  CHECK(r.out == "1*qp\n");

  const RunResult counted = run("mul --count-mults \"1*qp + 1*pq\" \"1*qp + 1*pq\"");
  CHECK(counted.status == 0);
  CHECK(counted.out.find("mults = 2") != std::string::npos);

  const RunResult gamma = run("mul \"1*g1 + 1*g2\" \"1*g1 + -1*g2\"");
  CHECK(gamma.status == 0);
  CHECK(gamma.out == "2*1 + -2*g1 g2\n");
}

TEST_CASE("mul error paths", "[cli]") {
  CHECK(run("mul \"1*q\" \"garbage\"").status != 0);
  CHECK(run("mul \"1*q\" \"1*g1\"").status != 0);          // mixed bases
  CHECK(run("mul \"1*q\" \"1*q p\"").status != 0);         // m mismatch
}

TEST_CASE("convert", "[cli]") {
  const RunResult r = run("convert \"1*qp\"");
  CHECK(r.status == 0);
  CHECK(r.out == "1/2*1 + 1/2*g1 g2\n");

  const RunResult back = run("convert \"1/2*1 + 1/2*g1 g2\"");
  CHECK(back.status == 0);
  CHECK(back.out == "1*qp\n");
}

TEST_CASE("mis and clique", "[cli]") {
  const std::string dimacs = write_temp("p3.col", "p edge 3 2\ne 1 2\ne 2 3\n");
  const RunResult mis = run("mis --format dimacs " + dimacs);
  CHECK(mis.status == 0);
  CHECK(mis.out.find("alpha = 2") != std::string::npos);
  CHECK(mis.out.find("{1,3}") != std::string::npos);

  const RunResult clique = run("clique --format dimacs " + dimacs);
  CHECK(clique.status == 0);
  CHECK(clique.out.find("omega = 2") != std::string::npos);

  const std::string edges = write_temp("p3.txt", "1 2\n2 3\n");
  const RunResult mis2 = run("mis --format edgelist " + edges);
  CHECK(mis2.status == 0);
  CHECK(mis2.out.find("alpha = 2") != std::string::npos);

  // complement of the path: single edge 1-3, so alpha = 2 again but sets differ
  const RunResult misc = run("mis --complement --format dimacs " + dimacs);
  CHECK(misc.status == 0);
  CHECK(misc.out.find("alpha = 2") != std::string::npos);
  CHECK(misc.out.find("{1,2}") != std::string::npos);
}

TEST_CASE("graph error paths", "[cli]") {
  CHECK(run("mis /nonexistent.col").status != 0);
  const std::string bad = write_temp("bad.col", "e 1 2\n");
  CHECK(run("mis --format dimacs " + bad).status != 0);
}

TEST_CASE("tables", "[cli]") {
  const RunResult slot = run("tables --slot-table");
  CHECK(slot.status == 0);
  CHECK(slot.out.find("qp") != std::string::npos);

  const RunResult h = run("tables --hadamard 1");
  CHECK(h.status == 0);
  CHECK(h.out == "1 1\n1 -1\n");

  const RunResult p = run("tables --perm 1");
  CHECK(p.status == 0);
  CHECK(p.out == "1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n");
}

TEST_CASE("bench", "[cli]") {
  const RunResult r = run("bench --m 2");
  CHECK(r.status == 0);
  CHECK(r.out.find("dense_efb_mults=64") != std::string::npos);
  CHECK(r.out.find("dense_gamma_mults=256") != std::string::npos);
}

TEST_CASE("verify", "[cli]") {
  const RunResult r = run("verify --m 2 --samples 20");
  CHECK(r.status == 0);
  CHECK(r.out.find("verify ok") != std::string::npos);
}
